//! Selective codeword manipulation: diffing two symbols, choosing the
//! cheapest set of bit flips that makes a bounded-distance decoder land on a
//! chosen codeword, and searching for the cheapest single-byte text edit.

mod diff;
mod plan;
mod search;

pub use diff::{codeword_diff, DiffReport, DiffRow};
pub use plan::{minimal_flip_plan, plan_to_pixels, verify_plan, AttackPlan, BlockPlan, FlipByte};
pub use search::{
    generalization_row, generalization_table, nearest_message, Alphabet, Candidate, NearestResult,
    TableRow,
};

/// Sum of the `len - t` smallest costs: the price of moving a block to
/// within distance `t` of the target.
pub(crate) fn cheapest_sum(costs: &mut [u32], t: usize) -> u32 {
    costs.sort_unstable();
    let need = costs.len().saturating_sub(t);
    costs[..need].iter().sum()
}
