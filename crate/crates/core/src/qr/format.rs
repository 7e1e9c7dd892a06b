//! Format information (BCH(15,5), generator `0x537`, XOR mask `0x5412`) and
//! version information (BCH(18,6), generator `0x1F25`).

use super::EcLevel;

const FORMAT_GENERATOR: u32 = 0x537;
const FORMAT_MASK: u32 = 0x5412;
const VERSION_GENERATOR: u32 = 0x1F25;

/// Remainder of `value · x^parity_bits` modulo `generator` over GF(2).
fn bch_remainder(value: u32, parity_bits: u32, generator: u32) -> u32 {
    let mut rem = value;
    for _ in 0..parity_bits {
        rem = (rem << 1) ^ ((rem >> (parity_bits - 1)) * generator);
    }
    rem & ((1 << parity_bits) - 1)
}

/// 15-bit format word: 2 level bits, 3 mask bits, 10 BCH parity bits, masked.
pub fn format_info(ec_level: EcLevel, mask: u8) -> u32 {
    let data = ec_level.format_bits() << 3 | (mask as u32 & 7);
    (data << 10 | bch_remainder(data, 10, FORMAT_GENERATOR)) ^ FORMAT_MASK
}

/// Nearest valid format word within Hamming distance 3, as `(level, mask)`.
pub fn decode_format_info(bits: u32) -> Option<(EcLevel, u8)> {
    let (best, dist) = (0..32u32)
        .map(|d| {
            let level = EcLevel::from_format_bits(d >> 3);
            let mask = (d & 7) as u8;
            (
                (level, mask),
                (format_info(level, mask) ^ bits).count_ones(),
            )
        })
        .min_by_key(|&(_, dist)| dist)?;
    (dist <= 3).then_some(best)
}

/// 18-bit version word for versions 7 and up.
pub fn version_info(version: u32) -> u32 {
    version << 12 | bch_remainder(version, 12, VERSION_GENERATOR)
}
