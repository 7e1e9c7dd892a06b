//! Module grid: function patterns, zig-zag codeword placement, masks and the
//! mask penalty rules.

use super::{
    format_info, num_raw_data_modules, symbol_size, version_info, CodewordSet, EcLevel, MaskChoice,
    QrConfig,
};
use crate::error::{Error, Result};

const PENALTY_N1: u32 = 3;
const PENALTY_N2: u32 = 3;
const PENALTY_N3: u32 = 40;
const PENALTY_N4: u32 = 10;

/// Square grid of modules (`true` = dark) plus the function-module mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMatrix {
    size: usize,
    version: u32,
    modules: Vec<bool>,
    function: Vec<bool>,
    mask: Option<u8>,
}

impl ModuleMatrix {
    /// All-light grid for a version with the function patterns drawn and
    /// marked. Format areas are reserved (light) until stamped.
    pub fn template(version: u32) -> Result<ModuleMatrix> {
        super::check_version(version)?;
        let size = symbol_size(version);
        let mut m = ModuleMatrix {
            size,
            version,
            modules: vec![false; size * size],
            function: vec![false; size * size],
            mask: None,
        };
        m.draw_function_patterns();
        Ok(m)
    }

    /// Wraps a bare grid (for example one read from a file). The function
    /// mask is recomputed from the size.
    pub fn from_modules(size: usize, modules: Vec<bool>) -> Result<ModuleMatrix> {
        if size < 21 || !(size - 17).is_multiple_of(4) || modules.len() != size * size {
            return Err(Error::LayoutMismatch(format!(
                "{size}x{size} is not a QR symbol size"
            )));
        }
        let mut m = ModuleMatrix::template(((size - 17) / 4) as u32)?;
        m.modules = modules;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    /// Mask stamped by [`build_matrix`], if any.
    pub fn mask(&self) -> Option<u8> {
        self.mask
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.modules[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, dark: bool) {
        self.modules[row * self.size + col] = dark;
    }

    pub fn toggle(&mut self, row: usize, col: usize) {
        self.modules[row * self.size + col] ^= true;
    }

    pub fn is_function(&self, row: usize, col: usize) -> bool {
        self.function[row * self.size + col]
    }

    pub fn modules(&self) -> &[bool] {
        &self.modules
    }

    pub fn dark_count(&self) -> usize {
        self.modules.iter().filter(|&&d| d).count()
    }

    fn set_function(&mut self, row: usize, col: usize, dark: bool) {
        let i = row * self.size + col;
        self.modules[i] = dark;
        self.function[i] = true;
    }

    fn draw_function_patterns(&mut self) {
        let size = self.size;
        for i in 0..size {
            self.set_function(6, i, i % 2 == 0);
            self.set_function(i, 6, i % 2 == 0);
        }
        self.draw_finder(3, 3);
        self.draw_finder(3, size - 4);
        self.draw_finder(size - 4, 3);

        let align = alignment_positions(self.version);
        let last = align.len().saturating_sub(1);
        for (i, &r) in align.iter().enumerate() {
            for (j, &c) in align.iter().enumerate() {
                let corner = (i == 0 && j == 0) || (i == 0 && j == last) || (i == last && j == 0);
                if !corner {
                    self.draw_alignment(r, c);
                }
            }
        }
        // Reserve format areas; real bits are stamped later.
        self.draw_format_bits(0);
        self.draw_version();
    }

    fn draw_finder(&mut self, row: usize, col: usize) {
        for dr in -4i32..=4 {
            for dc in -4i32..=4 {
                let (r, c) = (row as i32 + dr, col as i32 + dc);
                if (0..self.size as i32).contains(&r) && (0..self.size as i32).contains(&c) {
                    let dist = dr.abs().max(dc.abs());
                    self.set_function(r as usize, c as usize, dist != 2 && dist != 4);
                }
            }
        }
    }

    fn draw_alignment(&mut self, row: usize, col: usize) {
        for dr in -2i32..=2 {
            for dc in -2i32..=2 {
                let dark = dr.abs().max(dc.abs()) != 1;
                self.set_function((row as i32 + dr) as usize, (col as i32 + dc) as usize, dark);
            }
        }
    }

    /// Stamps both copies of a 15-bit format word and the dark module.
    pub(crate) fn draw_format_bits(&mut self, bits: u32) {
        let bit = |i: usize| bits >> i & 1 == 1;
        let size = self.size;
        for i in 0..6 {
            self.set_function(i, 8, bit(i));
        }
        self.set_function(7, 8, bit(6));
        self.set_function(8, 8, bit(7));
        self.set_function(8, 7, bit(8));
        for i in 9..15 {
            self.set_function(8, 14 - i, bit(i));
        }
        for i in 0..8 {
            self.set_function(8, size - 1 - i, bit(i));
        }
        for i in 8..15 {
            self.set_function(size - 15 + i, 8, bit(i));
        }
        self.set_function(size - 8, 8, true);
    }

    fn draw_version(&mut self) {
        if self.version < 7 {
            return;
        }
        let bits = version_info(self.version);
        for i in 0..18 {
            let dark = bits >> i & 1 == 1;
            let a = self.size - 11 + i % 3;
            let b = i / 3;
            self.set_function(b, a, dark);
            self.set_function(a, b, dark);
        }
    }

    /// The two 15-bit format copies as stored, `(around top-left, split copy)`.
    pub fn read_format_bits(&self) -> (u32, u32) {
        let size = self.size;
        let mut first = 0u32;
        let mut second = 0u32;
        let put = |word: &mut u32, i: usize, dark: bool| *word |= (dark as u32) << i;
        for i in 0..6 {
            put(&mut first, i, self.get(i, 8));
        }
        put(&mut first, 6, self.get(7, 8));
        put(&mut first, 7, self.get(8, 8));
        put(&mut first, 8, self.get(8, 7));
        for i in 9..15 {
            put(&mut first, i, self.get(8, 14 - i));
        }
        for i in 0..8 {
            put(&mut second, i, self.get(8, size - 1 - i));
        }
        for i in 8..15 {
            put(&mut second, i, self.get(size - 15 + i, 8));
        }
        (first, second)
    }

    /// Non-function modules in placement order: two-column strips from the
    /// right edge, alternating upward and downward, skipping the vertical
    /// timing column.
    pub fn data_path(&self) -> Vec<(usize, usize)> {
        let size = self.size;
        let mut path = Vec::with_capacity(num_raw_data_modules(self.version));
        let mut right = size as i32 - 1;
        while right >= 1 {
            if right == 6 {
                right = 5;
            }
            let upward = (right + 1) & 2 == 0;
            for vert in 0..size {
                let row = if upward { size - 1 - vert } else { vert };
                for j in 0..2 {
                    let col = (right - j) as usize;
                    if !self.is_function(row, col) {
                        path.push((row, col));
                    }
                }
            }
            right -= 2;
        }
        path
    }

    fn place(&mut self, codewords: &[u8]) {
        let path = self.data_path();
        for (i, &(r, c)) in path.iter().enumerate() {
            let dark = i < codewords.len() * 8 && codewords[i / 8] >> (7 - i % 8) & 1 == 1;
            self.set(r, c, dark);
        }
    }

    /// Reads raw (still masked) codeword bits back along the data path.
    pub fn read_codewords(&self) -> Vec<u8> {
        let n = num_raw_data_modules(self.version) / 8;
        let mut out = vec![0u8; n];
        for (i, &(r, c)) in self.data_path().iter().take(n * 8).enumerate() {
            if self.get(r, c) {
                out[i / 8] |= 0x80 >> (i % 8);
            }
        }
        out
    }

    fn stamp_format(&mut self, ec_level: EcLevel, mask: u8) {
        self.draw_format_bits(format_info(ec_level, mask));
        self.mask = Some(mask);
    }
}

/// Alignment-pattern centre coordinates, shared by rows and columns.
fn alignment_positions(version: u32) -> Vec<usize> {
    if version == 1 {
        return Vec::new();
    }
    let v = version as usize;
    let num = v / 7 + 2;
    let step = (v * 8 + num * 3 + 5) / (num * 4 - 4) * 2;
    let size = symbol_size(version);
    let mut out: Vec<usize> = (0..num - 1).map(|i| size - 7 - i * step).collect();
    out.push(6);
    out.reverse();
    out
}

/// Whether mask `mask` inverts the module at `(row, col)`.
pub fn mask_predicate(mask: u8, row: usize, col: usize) -> bool {
    let (i, j) = (row, col);
    match mask {
        0 => (i + j) % 2 == 0,
        1 => i % 2 == 0,
        2 => j % 3 == 0,
        3 => (i + j) % 3 == 0,
        4 => (i / 2 + j / 3) % 2 == 0,
        5 => (i * j) % 2 + (i * j) % 3 == 0,
        6 => ((i * j) % 2 + (i * j) % 3) % 2 == 0,
        7 => ((i + j) % 2 + (i * j) % 3) % 2 == 0,
        _ => panic!("mask id {mask} out of range"),
    }
}

/// XORs the mask pattern over every non-function module. Applying the same
/// mask twice restores the input.
pub fn apply_mask(matrix: &ModuleMatrix, mask: u8) -> ModuleMatrix {
    let mut out = matrix.clone();
    for r in 0..out.size {
        for c in 0..out.size {
            if !out.is_function(r, c) && mask_predicate(mask, r, c) {
                out.toggle(r, c);
            }
        }
    }
    out
}

// Run-length history for the finder-like (1:1:3:1:1) penalty.
struct FinderRuns {
    size: i32,
    history: [i32; 7],
}

impl FinderRuns {
    fn new(size: usize) -> Self {
        FinderRuns {
            size: size as i32,
            history: [0; 7],
        }
    }

    fn push(&mut self, mut run: i32) {
        if self.history[0] == 0 {
            run += self.size; // light border before the first run
        }
        self.history.copy_within(0..6, 1);
        self.history[0] = run;
    }

    fn count(&self) -> u32 {
        let h = &self.history;
        let n = h[1];
        let core = n > 0 && h[2] == n && h[3] == n * 3 && h[4] == n && h[5] == n;
        u32::from(core && h[0] >= n * 4 && h[6] >= n)
            + u32::from(core && h[6] >= n * 4 && h[0] >= n)
    }

    fn finish(mut self, color: bool, mut run: i32) -> u32 {
        if color {
            self.push(run);
            run = 0;
        }
        run += self.size;
        self.push(run);
        self.count()
    }
}

/// Standard N1..N4 penalty over the whole symbol.
pub fn penalty_score(m: &ModuleMatrix) -> u32 {
    let size = m.size;
    let mut score = 0;
    for transpose in [false, true] {
        for a in 0..size {
            let mut color = false;
            let mut run = 0i32;
            let mut runs = FinderRuns::new(size);
            for b in 0..size {
                let dark = if transpose { m.get(b, a) } else { m.get(a, b) };
                if dark == color {
                    run += 1;
                    if run == 5 {
                        score += PENALTY_N1;
                    } else if run > 5 {
                        score += 1;
                    }
                } else {
                    runs.push(run);
                    if !color {
                        score += runs.count() * PENALTY_N3;
                    }
                    color = dark;
                    run = 1;
                }
            }
            score += runs.finish(color, run) * PENALTY_N3;
        }
    }
    for r in 0..size - 1 {
        for c in 0..size - 1 {
            let d = m.get(r, c);
            if d == m.get(r, c + 1) && d == m.get(r + 1, c) && d == m.get(r + 1, c + 1) {
                score += PENALTY_N2;
            }
        }
    }
    let dark = m.dark_count() as i64;
    let total = (size * size) as i64;
    let k = ((dark * 20 - total * 10).abs() + total - 1) / total - 1;
    score + k as u32 * PENALTY_N4
}

/// Places the wire-order codewords, applies the chosen (or lowest-penalty)
/// mask and stamps the format information.
pub fn build_matrix(codewords: &CodewordSet, config: &QrConfig) -> Result<ModuleMatrix> {
    if codewords.version != config.version || codewords.ec_level != config.ec_level {
        return Err(Error::LayoutMismatch(
            "codewords built for a different configuration".into(),
        ));
    }
    let expected = num_raw_data_modules(config.version) / 8;
    if codewords.interleaved.len() != expected {
        return Err(Error::LayoutMismatch(format!(
            "expected {expected} codewords, got {}",
            codewords.interleaved.len()
        )));
    }
    let mut base = ModuleMatrix::template(config.version)?;
    base.place(&codewords.interleaved);
    let finish = |mask: u8| {
        let mut m = apply_mask(&base, mask);
        m.stamp_format(config.ec_level, mask);
        m
    };
    Ok(match config.mask {
        MaskChoice::Fixed(mask) => finish(mask),
        MaskChoice::Auto => (0..8u8)
            .map(finish)
            .min_by_key(penalty_score)
            .expect("eight candidates"),
    })
}
