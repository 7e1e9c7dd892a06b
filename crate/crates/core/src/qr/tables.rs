//! Standard QR capacity tables (ISO/IEC 18004, versions 1..40).

use super::{check_version, count_bits, EcLevel};
use crate::error::{Error, Result};

// Error-correction codewords per block, indexed [level][version]; index 0 unused.
#[rustfmt::skip]
static EC_CODEWORDS_PER_BLOCK: [[u8; 41]; 4] = [
    [0,  7, 10, 15, 20, 26, 18, 20, 24, 30, 18, 20, 24, 26, 30, 22, 24, 28, 30, 28, 28, 28, 28, 30, 30, 26, 28, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30],
    [0, 10, 16, 26, 18, 24, 16, 18, 22, 22, 26, 30, 22, 22, 24, 24, 28, 28, 26, 26, 26, 26, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28],
    [0, 13, 22, 18, 26, 18, 24, 18, 22, 20, 24, 28, 26, 24, 20, 30, 24, 28, 28, 26, 30, 28, 30, 30, 30, 30, 28, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30],
    [0, 17, 28, 22, 16, 22, 28, 26, 26, 24, 28, 24, 28, 22, 24, 24, 30, 28, 28, 26, 28, 30, 24, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30],
];

// Number of RS blocks, indexed [level][version].
#[rustfmt::skip]
static NUM_BLOCKS: [[u8; 41]; 4] = [
    [0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 4,  4,  4,  4,  4,  6,  6,  6,  6,  7,  8,  8,  9,  9, 10, 12, 12, 12, 13, 14, 15, 16, 17, 18, 19, 19, 20, 21, 22, 24, 25],
    [0, 1, 1, 1, 2, 2, 4, 4, 4, 5, 5,  5,  8,  9,  9, 10, 10, 11, 13, 14, 16, 17, 17, 18, 20, 21, 23, 25, 26, 28, 29, 31, 33, 35, 37, 38, 40, 43, 45, 47, 49],
    [0, 1, 1, 2, 2, 4, 4, 6, 6, 8, 8,  8, 10, 12, 16, 12, 17, 16, 18, 21, 20, 23, 23, 25, 27, 29, 34, 34, 35, 38, 40, 43, 45, 48, 51, 53, 56, 59, 62, 65, 68],
    [0, 1, 1, 2, 4, 4, 4, 5, 6, 8, 8, 11, 11, 16, 16, 18, 16, 19, 21, 25, 25, 25, 34, 30, 32, 35, 37, 40, 42, 45, 48, 51, 54, 57, 60, 63, 66, 70, 74, 77, 81],
];

/// Data-carrying modules (codeword bits plus remainder bits) of a version.
pub fn num_raw_data_modules(version: u32) -> usize {
    let v = version as usize;
    let mut result = (16 * v + 128) * v + 64;
    if v >= 2 {
        let num_align = v / 7 + 2;
        result -= (25 * num_align - 10) * num_align - 55;
        if v >= 7 {
            result -= 36;
        }
    }
    result
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockSpec {
    pub data_len: usize,
    pub ec_len: usize,
}

impl BlockSpec {
    pub fn len(&self) -> usize {
        self.data_len + self.ec_len
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Symbol errors a bounded-distance decoder fixes in this block.
    pub fn t(&self) -> usize {
        self.ec_len / 2
    }
}

/// Split of a symbol's codewords into RS blocks, with the interleaved wire order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    pub version: u32,
    pub ec_level: EcLevel,
    pub blocks: Vec<BlockSpec>,
    // wire index -> (block, offset within block's data ‖ ec)
    wire: Vec<(usize, usize)>,
    // [block][offset] -> wire index
    inverse: Vec<Vec<usize>>,
}

pub fn block_layout(version: u32, ec_level: EcLevel) -> Result<BlockLayout> {
    check_version(version)?;
    let lv = ec_level.ordinal();
    let v = version as usize;
    let num_blocks = NUM_BLOCKS[lv][v] as usize;
    let ec_len = EC_CODEWORDS_PER_BLOCK[lv][v] as usize;
    let raw = num_raw_data_modules(version) / 8;
    let num_short = num_blocks - raw % num_blocks;
    let short_len = raw / num_blocks;
    let blocks: Vec<BlockSpec> = (0..num_blocks)
        .map(|i| BlockSpec {
            data_len: short_len - ec_len + usize::from(i >= num_short),
            ec_len,
        })
        .collect();

    // Data bytes column by column across blocks, then EC bytes likewise.
    let mut wire = Vec::with_capacity(raw);
    let max_data = blocks.iter().map(|b| b.data_len).max().unwrap_or(0);
    for i in 0..max_data {
        for (b, spec) in blocks.iter().enumerate() {
            if i < spec.data_len {
                wire.push((b, i));
            }
        }
    }
    for i in 0..ec_len {
        for (b, spec) in blocks.iter().enumerate() {
            wire.push((b, spec.data_len + i));
        }
    }
    let mut inverse: Vec<Vec<usize>> = blocks.iter().map(|s| vec![0; s.len()]).collect();
    for (w, &(b, off)) in wire.iter().enumerate() {
        inverse[b][off] = w;
    }
    Ok(BlockLayout {
        version,
        ec_level,
        blocks,
        wire,
        inverse,
    })
}

impl BlockLayout {
    pub fn total_data(&self) -> usize {
        self.blocks.iter().map(|b| b.data_len).sum()
    }

    pub fn total_ec(&self) -> usize {
        self.blocks.iter().map(|b| b.ec_len).sum()
    }

    pub fn total_codewords(&self) -> usize {
        self.wire.len()
    }

    /// Where wire byte `w` lives: `(block, offset)`, offset counted over `data ‖ ec`.
    pub fn locate(&self, wire_index: usize) -> (usize, usize) {
        self.wire[wire_index]
    }

    /// Inverse of [`BlockLayout::locate`].
    pub fn wire_index(&self, block: usize, offset: usize) -> usize {
        self.inverse[block][offset]
    }

    /// `(block, offset)` of the `i`-th data codeword in segment order.
    pub fn locate_data(&self, mut i: usize) -> (usize, usize) {
        for (b, spec) in self.blocks.iter().enumerate() {
            if i < spec.data_len {
                return (b, i);
            }
            i -= spec.data_len;
        }
        panic!("data index out of range")
    }

    /// Interleaves per-block `data ‖ ec` vectors into wire order.
    pub fn interleave(&self, blocks: &[Vec<u8>]) -> Result<Vec<u8>> {
        if blocks.len() != self.blocks.len()
            || blocks
                .iter()
                .zip(&self.blocks)
                .any(|(b, s)| b.len() != s.len())
        {
            return Err(Error::LayoutMismatch(
                "block shapes differ from layout".into(),
            ));
        }
        Ok(self.wire.iter().map(|&(b, off)| blocks[b][off]).collect())
    }

    /// Splits a wire-order codeword stream back into per-block `data ‖ ec`.
    pub fn deinterleave(&self, wire: &[u8]) -> Result<Vec<Vec<u8>>> {
        if wire.len() != self.wire.len() {
            return Err(Error::LayoutMismatch(format!(
                "expected {} codewords, got {}",
                self.wire.len(),
                wire.len()
            )));
        }
        let mut out: Vec<Vec<u8>> = self.blocks.iter().map(|s| vec![0; s.len()]).collect();
        for (&byte, &(b, off)) in wire.iter().zip(&self.wire) {
            out[b][off] = byte;
        }
        Ok(out)
    }
}

/// Text bytes storable in byte mode.
pub fn capacity(version: u32, ec_level: EcLevel) -> Result<usize> {
    let layout = block_layout(version, ec_level)?;
    Ok((layout.total_data() * 8 - 4 - count_bits(version)) / 8)
}
