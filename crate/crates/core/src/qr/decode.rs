use super::{
    apply_mask, block_layout, decode_format_info, parse_data_segment, EcLevel, ModuleMatrix,
};
use crate::error::{Error, Result};
use crate::rs::RsParams;

/// Outcome of reading a symbol back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub version: u32,
    pub ec_level: EcLevel,
    /// Mask read from the format information; `None` when decoding bare codewords.
    pub mask: Option<u8>,
    pub text: Vec<u8>,
    /// Symbol errors corrected in each block.
    pub errors_per_block: Vec<usize>,
    /// Corrected codewords in wire order.
    pub corrected: Vec<u8>,
}

impl Decoded {
    pub fn total_errors(&self) -> usize {
        self.errors_per_block.iter().sum()
    }
}

/// De-interleaves wire-order codewords, corrects each block and parses the
/// data segment.
pub fn decode_codewords(version: u32, ec_level: EcLevel, wire: &[u8]) -> Result<Decoded> {
    let layout = block_layout(version, ec_level)?;
    let blocks = layout.deinterleave(wire)?;
    let mut data = Vec::with_capacity(layout.total_data());
    let mut corrected_blocks = Vec::with_capacity(blocks.len());
    let mut errors_per_block = Vec::with_capacity(blocks.len());
    for (i, (block, spec)) in blocks.iter().zip(&layout.blocks).enumerate() {
        let rs = RsParams::qr(spec.len(), spec.data_len)?;
        let (fixed, n) = rs.decode_bytes(block).map_err(|e| match e {
            Error::DecodeFailure => Error::BlockDecodeFailure { block: i },
            other => other,
        })?;
        data.extend_from_slice(&fixed[..spec.data_len]);
        errors_per_block.push(n);
        corrected_blocks.push(fixed);
    }
    let text = parse_data_segment(&data, version)?;
    Ok(Decoded {
        version,
        ec_level,
        mask: None,
        text,
        errors_per_block,
        corrected: layout.interleave(&corrected_blocks)?,
    })
}

/// Reads format information (either copy), removes the mask, walks the
/// placement path and decodes the codewords.
pub fn decode_matrix(matrix: &ModuleMatrix) -> Result<Decoded> {
    let (first, second) = matrix.read_format_bits();
    let (ec_level, mask) = decode_format_info(first)
        .or_else(|| decode_format_info(second))
        .ok_or(Error::FormatUnreadable)?;
    let wire = apply_mask(matrix, mask).read_codewords();
    let mut out = decode_codewords(matrix.version(), ec_level, &wire)?;
    out.mask = Some(mask);
    Ok(out)
}
