//! QR byte-mode pipeline: capacities and block layouts, data segments,
//! per-block Reed-Solomon parity and interleaving, format information,
//! masking, module placement, rendering, and decoding a module grid back to
//! text.
//!
//! Only byte mode is produced or accepted. Matrices are clean module grids
//! (no image processing).

mod codewords;
mod decode;
mod format;
mod matrix;
mod render;
mod segment;
mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use codewords::{encode, Block, CodewordSet};
pub use decode::{decode_codewords, decode_matrix, Decoded};
pub use format::{decode_format_info, format_info, version_info};
pub use matrix::{apply_mask, build_matrix, mask_predicate, penalty_score, ModuleMatrix};
pub use render::{parse_pbm, to_ascii, to_pbm, CodewordJson, QUIET_ZONE};
pub use segment::{build_data_segment, parse_data_segment, text_byte_offset, DataSegment};
pub use tables::{block_layout, capacity, num_raw_data_modules, BlockLayout, BlockSpec};

use crate::error::{Error, Result};

/// Error-correction level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EcLevel {
    L,
    M,
    Q,
    H,
}

impl EcLevel {
    pub const ALL: [EcLevel; 4] = [EcLevel::L, EcLevel::M, EcLevel::Q, EcLevel::H];

    /// Row index into the standard tables.
    pub fn ordinal(self) -> usize {
        self as usize
    }

    /// Two-bit code stored in the format information.
    pub fn format_bits(self) -> u32 {
        match self {
            EcLevel::L => 1,
            EcLevel::M => 0,
            EcLevel::Q => 3,
            EcLevel::H => 2,
        }
    }

    pub fn from_format_bits(bits: u32) -> EcLevel {
        match bits & 3 {
            1 => EcLevel::L,
            0 => EcLevel::M,
            3 => EcLevel::Q,
            _ => EcLevel::H,
        }
    }

    /// Advertised share of codewords that can be restored.
    pub fn nominal_recovery_percent(self) -> u32 {
        match self {
            EcLevel::L => 7,
            EcLevel::M => 15,
            EcLevel::Q => 25,
            EcLevel::H => 30,
        }
    }
}

impl fmt::Display for EcLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            EcLevel::L => "L",
            EcLevel::M => "M",
            EcLevel::Q => "Q",
            EcLevel::H => "H",
        };
        f.write_str(c)
    }
}

impl FromStr for EcLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<EcLevel> {
        match s.to_ascii_uppercase().as_str() {
            "L" => Ok(EcLevel::L),
            "M" => Ok(EcLevel::M),
            "Q" => Ok(EcLevel::Q),
            "H" => Ok(EcLevel::H),
            _ => Err(Error::BadFormat(format!(
                "unknown error-correction level {s:?}"
            ))),
        }
    }
}

/// Mask selection: a fixed pattern or the lowest-penalty one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MaskChoice {
    #[default]
    Auto,
    Fixed(u8),
}

impl FromStr for MaskChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<MaskChoice> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(MaskChoice::Auto);
        }
        match s.parse::<u8>() {
            Ok(m) if m < 8 => Ok(MaskChoice::Fixed(m)),
            _ => Err(Error::BadFormat(format!(
                "mask must be auto or 0..7, got {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QrConfig {
    pub version: u32,
    pub ec_level: EcLevel,
    pub mask: MaskChoice,
}

impl QrConfig {
    pub fn new(version: u32, ec_level: EcLevel) -> Result<QrConfig> {
        check_version(version)?;
        Ok(QrConfig {
            version,
            ec_level,
            mask: MaskChoice::Auto,
        })
    }

    pub fn with_mask(mut self, mask: MaskChoice) -> QrConfig {
        self.mask = mask;
        self
    }

    /// Modules per side, `17 + 4 v`.
    pub fn size(&self) -> usize {
        symbol_size(self.version)
    }
}

pub fn symbol_size(version: u32) -> usize {
    17 + 4 * version as usize
}

pub(crate) fn check_version(version: u32) -> Result<()> {
    if (1..=40).contains(&version) {
        Ok(())
    } else {
        Err(Error::UnsupportedVersion(version))
    }
}

/// Width of the byte-mode character-count field.
pub fn count_bits(version: u32) -> usize {
    if version <= 9 {
        8
    } else {
        16
    }
}
