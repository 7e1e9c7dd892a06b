use serde::Serialize;

use super::codeword_diff;
use crate::error::{Error, Result};
use crate::qr::{decode_codewords, CodewordSet, EcLevel, ModuleMatrix, QrConfig};

/// One codeword byte to overwrite, as an XOR against the original.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipByte {
    /// Wire-order index.
    pub index: usize,
    pub block: usize,
    pub offset: usize,
    pub xor: u8,
    pub bits: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockPlan {
    pub block: usize,
    pub t: usize,
    /// Wire indices where original and target differ.
    pub differing: Vec<usize>,
    pub chosen: Vec<FlipByte>,
}

impl BlockPlan {
    /// Differing positions left for the decoder to correct.
    pub fn residual(&self) -> usize {
        self.differing.len() - self.chosen.len()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttackPlan {
    pub version: u32,
    pub ec_level: EcLevel,
    pub original_text: Vec<u8>,
    pub target_text: Vec<u8>,
    pub blocks: Vec<BlockPlan>,
    pub total_bit_flips: u32,
    /// `8 ·` total codewords of the symbol.
    pub total_bits: usize,
    pub percentage_of_total_bits: f64,
    /// Modules to toggle, in codeword bit order.
    pub pixel_coords: Vec<(usize, usize)>,
}

impl AttackPlan {
    pub fn is_empty(&self) -> bool {
        self.total_bit_flips == 0
    }

    /// All chosen bytes across blocks, by wire index.
    pub fn bytes(&self) -> Vec<&FlipByte> {
        let mut v: Vec<&FlipByte> = self.blocks.iter().flat_map(|b| &b.chosen).collect();
        v.sort_by_key(|f| f.index);
        v
    }

    /// The original wire codewords with the plan applied.
    pub fn apply(&self, original: &[u8]) -> Vec<u8> {
        let mut out = original.to_vec();
        for f in self.blocks.iter().flat_map(|b| &b.chosen) {
            out[f.index] ^= f.xor;
        }
        out
    }
}

/// Per block, overwrite the `|D| - t` differing bytes with the fewest bit
/// changes (ties to the lower index); the decoder fixes the remaining `t`.
/// Identical inputs give an empty plan.
pub fn minimal_flip_plan(original: &CodewordSet, target: &CodewordSet) -> Result<AttackPlan> {
    let diff = codeword_diff(original, target)?;
    let layout = original.layout();
    let mut blocks = Vec::new();
    for (b, spec) in layout.blocks.iter().enumerate() {
        let mut rows: Vec<_> = diff.block(b).collect();
        if rows.is_empty() {
            continue;
        }
        let differing = rows.iter().map(|r| r.index).collect();
        rows.sort_by_key(|r| (r.bit_cost, r.index));
        let need = rows.len().saturating_sub(spec.t());
        let mut chosen: Vec<FlipByte> = rows[..need]
            .iter()
            .map(|r| FlipByte {
                index: r.index,
                block: b,
                offset: r.offset,
                xor: r.xor(),
                bits: r.bit_cost,
            })
            .collect();
        chosen.sort_by_key(|f| f.index);
        blocks.push(BlockPlan {
            block: b,
            t: spec.t(),
            differing,
            chosen,
        });
    }
    let total_bit_flips = blocks.iter().flat_map(|b| &b.chosen).map(|f| f.bits).sum();
    let total_bits = original.total_bits();
    let mut plan = AttackPlan {
        version: original.version,
        ec_level: original.ec_level,
        original_text: original.text.clone(),
        target_text: target.text.clone(),
        blocks,
        total_bit_flips,
        total_bits,
        percentage_of_total_bits: total_bit_flips as f64 / total_bits as f64 * 100.0,
        pixel_coords: Vec::new(),
    };
    plan.pixel_coords = pixels_for(&plan, &ModuleMatrix::template(plan.version)?);
    Ok(plan)
}

fn pixels_for(plan: &AttackPlan, template: &ModuleMatrix) -> Vec<(usize, usize)> {
    let path = template.data_path();
    plan.bytes()
        .into_iter()
        .flat_map(|f| {
            (0..8)
                .filter(move |k| f.xor & (0x80 >> k) != 0)
                .map(move |k| f.index * 8 + k)
        })
        .map(|bit| path[bit])
        .collect()
}

/// Module coordinates `(row, col)` whose toggling realises the plan. The
/// placement path ignores the mask, so the list is valid for any mask.
pub fn plan_to_pixels(plan: &AttackPlan, config: &QrConfig) -> Result<Vec<(usize, usize)>> {
    if config.version != plan.version || config.ec_level != plan.ec_level {
        return Err(Error::LayoutMismatch(
            "plan was built for a different configuration".into(),
        ));
    }
    Ok(pixels_for(plan, &ModuleMatrix::template(config.version)?))
}

/// Applies the plan to the original codewords and runs the decoder; the
/// result must be the target text with every block within its radius.
pub fn verify_plan(original: &CodewordSet, plan: &AttackPlan) -> Result<Vec<u8>> {
    if original.version != plan.version || original.ec_level != plan.ec_level {
        return Err(Error::ConfigMismatch);
    }
    let tampered = plan.apply(&original.interleaved);
    let decoded = decode_codewords(plan.version, plan.ec_level, &tampered)
        .map_err(|e| Error::VerificationFailed(e.to_string()))?;
    let layout = original.layout();
    for (b, (&n, spec)) in decoded
        .errors_per_block
        .iter()
        .zip(&layout.blocks)
        .enumerate()
    {
        if n > spec.t() {
            return Err(Error::VerificationFailed(format!(
                "block {b} corrected {n} > t errors"
            )));
        }
    }
    let expected = if plan.is_empty() {
        &plan.original_text
    } else {
        &plan.target_text
    };
    if &decoded.text != expected {
        return Err(Error::VerificationFailed(format!(
            "decoded {:?}",
            String::from_utf8_lossy(&decoded.text)
        )));
    }
    Ok(decoded.text)
}
