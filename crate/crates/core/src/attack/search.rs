use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::cheapest_sum;
use crate::error::{Error, Result};
use crate::qr::{capacity, encode, text_byte_offset, BlockLayout, CodewordSet, EcLevel, QrConfig};
use crate::rs::RsParams;

/// Replacement bytes allowed in a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    #[default]
    All,
    /// `0x20..=0x7E`.
    Printable,
    /// `[0-9A-Za-z]`.
    Alnum,
}

impl Alphabet {
    pub fn contains(self, b: u8) -> bool {
        match self {
            Alphabet::All => true,
            Alphabet::Printable => (0x20..=0x7E).contains(&b),
            Alphabet::Alnum => b.is_ascii_alphanumeric(),
        }
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Alphabet> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Alphabet::All),
            "printable" => Ok(Alphabet::Printable),
            "alnum" => Ok(Alphabet::Alnum),
            _ => Err(Error::BadFormat(format!("unknown alphabet {s:?}"))),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::All => "all",
            Alphabet::Printable => "printable",
            Alphabet::Alnum => "alnum",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub position: usize,
    pub original: u8,
    pub replacement: u8,
    pub xor: u8,
    pub text: Vec<u8>,
    pub bit_flips: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NearestResult {
    /// Every minimizer, sorted by `(position, xor)`.
    pub candidates: Vec<Candidate>,
    pub minimum_flips: u32,
    pub total_bits: usize,
}

impl NearestResult {
    pub fn percentage(&self) -> f64 {
        self.minimum_flips as f64 / self.total_bits as f64 * 100.0
    }
}

// Cost oracle for single-byte text edits. Only the blocks holding the two
// data codewords touched by the edit are re-encoded; the rest are unchanged.
struct EditCost {
    version: u32,
    layout: BlockLayout,
    base: CodewordSet,
    rs: HashMap<usize, RsParams<'static>>,
}

impl EditCost {
    fn new(text: &[u8], config: &QrConfig) -> Result<EditCost> {
        let base = encode(text, config)?;
        let layout = base.layout();
        let mut rs = HashMap::new();
        for spec in &layout.blocks {
            if let std::collections::hash_map::Entry::Vacant(e) = rs.entry(spec.data_len) {
                e.insert(RsParams::qr(spec.len(), spec.data_len)?);
            }
        }
        Ok(EditCost {
            version: config.version,
            layout,
            base,
            rs,
        })
    }

    fn cost(&self, position: usize, xor: u8) -> u32 {
        let bit = text_byte_offset(self.version, position);
        let word = (xor as u16) << (8 - bit % 8);
        let touched = [(bit / 8, (word >> 8) as u8), (bit / 8 + 1, word as u8)];
        let mut edits: Vec<(usize, usize, u8)> = touched
            .iter()
            .filter(|&&(_, v)| v != 0)
            .map(|&(i, v)| {
                let (b, off) = self.layout.locate_data(i);
                (b, off, v)
            })
            .collect();
        edits.sort_unstable();
        let mut total = 0;
        let mut rest = &edits[..];
        while let Some(&(block, _, _)) = rest.first() {
            let n = rest.iter().take_while(|e| e.0 == block).count();
            total += self.block_cost(block, &rest[..n]);
            rest = &rest[n..];
        }
        total
    }

    fn block_cost(&self, block: usize, edits: &[(usize, usize, u8)]) -> u32 {
        let spec = self.layout.blocks[block];
        let orig = &self.base.blocks[block];
        let mut data = orig.data.clone();
        for &(_, off, v) in edits {
            data[off] ^= v;
        }
        let mut ec = vec![0u8; spec.ec_len];
        self.rs[&spec.data_len]
            .parity_bytes_into(&data, &mut ec)
            .expect("block shape from layout");
        let mut costs: Vec<u32> = data
            .iter()
            .zip(&orig.data)
            .chain(ec.iter().zip(&orig.ec))
            .map(|(a, b)| (a ^ b).count_ones())
            .filter(|&c| c > 0)
            .collect();
        cheapest_sum(&mut costs, spec.t())
    }
}

impl EditCost {
    // Whether every data codeword changed by the edit lies in the first block.
    fn first_block_only(&self, position: usize, xor: u8) -> bool {
        let bit = text_byte_offset(self.version, position);
        let word = (xor as u16) << (8 - bit % 8);
        [(bit / 8, word >> 8), (bit / 8 + 1, word & 0xFF)]
            .iter()
            .all(|&(i, v)| v == 0 || self.layout.locate_data(i).0 == 0)
    }
}

// (position, xor, bit flips)
type Scored = Vec<(usize, u8, u32)>;

fn score_all(text: &[u8], config: &QrConfig, alphabet: Alphabet) -> Result<(EditCost, Scored)> {
    let oracle = EditCost::new(text, config)?;
    let scored = (0..text.len())
        .into_par_iter()
        .flat_map_iter(|p| {
            let oracle = &oracle;
            (1..=255u8)
                .filter(move |&x| alphabet.contains(text[p] ^ x))
                .map(move |x| (p, x, oracle.cost(p, x)))
        })
        .collect();
    Ok((oracle, scored))
}

fn minimizers(scored: impl Iterator<Item = (usize, u8, u32)> + Clone) -> (u32, Vec<(usize, u8)>) {
    let min = scored.clone().map(|s| s.2).min().unwrap_or(0);
    let mut best: Vec<(usize, u8)> = scored.filter(|s| s.2 == min).map(|s| (s.0, s.1)).collect();
    best.sort_unstable();
    (min, best)
}

/// Exhaustive search over single-byte edits `(position, xor)` whose result
/// stays in `alphabet`, returning every edit of least bit-flip cost.
pub fn nearest_message(
    text: &[u8],
    config: &QrConfig,
    alphabet: Alphabet,
) -> Result<NearestResult> {
    let (oracle, scored) = score_all(text, config, alphabet)?;
    let (minimum_flips, best) = minimizers(scored.iter().copied());
    let candidates = best
        .into_iter()
        .map(|(position, xor)| {
            let mut t = text.to_vec();
            t[position] ^= xor;
            Candidate {
                position,
                original: text[position],
                replacement: t[position],
                xor,
                text: t,
                bit_flips: minimum_flips,
            }
        })
        .collect();
    Ok(NearestResult {
        candidates,
        minimum_flips,
        total_bits: oracle.base.total_bits(),
    })
}

/// One line of a generalization table: the cheapest single-byte edits of a
/// full-capacity symbol that stay inside the first RS block. Blocks of equal
/// shape repeat the same pattern at shifted positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub version: u32,
    pub ec_level: EcLevel,
    /// `(position, xor values)` in ascending order.
    pub entries: Vec<(usize, Vec<u8>)>,
    pub min_flips: u32,
    /// Least cost over every position of the symbol.
    pub symbol_min_flips: u32,
    /// Number of `(position, xor)` pairs anywhere in the symbol at `min_flips`.
    pub symbol_matches: usize,
}

impl fmt::Display for TableRow {
    /// `14,15 | 0x01 / 0x40,0x80 | 7`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let positions: Vec<String> = self.entries.iter().map(|(p, _)| p.to_string()).collect();
        let xors: Vec<String> = self
            .entries
            .iter()
            .map(|(_, xs)| {
                xs.iter()
                    .map(|x| format!("0x{x:02X}"))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(
            f,
            "{} | {} | {}",
            positions.join(","),
            xors.join(" / "),
            self.min_flips
        )
    }
}

fn probe(version: u32, level: EcLevel, seed: u64) -> Result<Vec<u8>> {
    let len = capacity(version, level)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..len).map(|_| rng.gen()).collect())
}

fn table_row(version: u32, level: EcLevel, text: &[u8]) -> Result<TableRow> {
    let (oracle, scored) = score_all(text, &QrConfig::new(version, level)?, Alphabet::All)?;
    let first_block = scored
        .iter()
        .copied()
        .filter(|s| oracle.first_block_only(s.0, s.1));
    let (min_flips, best) = minimizers(first_block);
    let mut entries: Vec<(usize, Vec<u8>)> = Vec::new();
    for (p, x) in best {
        match entries.last_mut() {
            Some((q, xs)) if *q == p => xs.push(x),
            _ => entries.push((p, vec![x])),
        }
    }
    let (symbol_min_flips, _) = minimizers(scored.iter().copied());
    let symbol_matches = scored.iter().filter(|s| s.2 == min_flips).count();
    Ok(TableRow {
        version,
        ec_level: level,
        entries,
        min_flips,
        symbol_min_flips,
        symbol_matches,
    })
}

/// Runs the unrestricted search on a random full-capacity probe, then on a
/// second independent probe; the two rows must agree.
pub fn generalization_row(version: u32, level: EcLevel, seed: u64) -> Result<TableRow> {
    let a = table_row(version, level, &probe(version, level, seed)?)?;
    let b = table_row(
        version,
        level,
        &probe(version, level, seed.wrapping_add(0x9E37_79B9_7F4A_7C15))?,
    )?;
    if a != b {
        return Err(Error::TextDependence);
    }
    Ok(a)
}

/// Rows for all four levels of a version.
pub fn generalization_table(version: u32, seed: u64) -> Result<Vec<TableRow>> {
    EcLevel::ALL
        .iter()
        .map(|&l| generalization_row(version, l, seed))
        .collect()
}
