use super::{block_layout, capacity, count_bits, QrConfig};
use crate::error::{Error, Result};

const MODE_BYTE: u8 = 0b0100;
const PAD_BYTES: [u8; 2] = [0xEC, 0x11];

/// A byte-mode data segment padded to the symbol's data capacity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataSegment {
    pub mode_bits: u8,
    pub length_field: usize,
    pub payload: Vec<u8>,
    pub terminator_bits: usize,
    pub pad_bytes: usize,
    /// The complete data codewords, `total_data` bytes.
    pub codewords: Vec<u8>,
}

struct BitWriter {
    bytes: Vec<u8>,
    bits: usize,
}

impl BitWriter {
    fn push(&mut self, value: u32, width: usize) {
        for i in (0..width).rev() {
            if self.bits.is_multiple_of(8) {
                self.bytes.push(0);
            }
            if value >> i & 1 == 1 {
                *self.bytes.last_mut().unwrap() |= 0x80 >> (self.bits % 8);
            }
            self.bits += 1;
        }
    }
}

pub fn build_data_segment(text: &[u8], config: &QrConfig) -> Result<DataSegment> {
    let cap = capacity(config.version, config.ec_level)?;
    if text.len() > cap {
        return Err(Error::Overflow {
            len: text.len(),
            capacity: cap,
        });
    }
    let total_data = block_layout(config.version, config.ec_level)?.total_data();
    let cc = count_bits(config.version);
    let mut w = BitWriter {
        bytes: Vec::with_capacity(total_data),
        bits: 0,
    };
    w.push(MODE_BYTE as u32, 4);
    w.push(text.len() as u32, cc);
    for &b in text {
        w.push(b as u32, 8);
    }
    let terminator = 4.min(total_data * 8 - w.bits);
    w.push(0, terminator);
    let align = (8 - w.bits % 8) % 8;
    w.push(0, align);
    let pad_bytes = total_data - w.bytes.len();
    for i in 0..pad_bytes {
        w.bytes.push(PAD_BYTES[i % 2]);
    }
    Ok(DataSegment {
        mode_bits: MODE_BYTE,
        length_field: text.len(),
        payload: text.to_vec(),
        terminator_bits: terminator,
        pad_bytes,
        codewords: w.bytes,
    })
}

/// Bit offset of text byte `pos` inside the data codewords.
pub fn text_byte_offset(version: u32, pos: usize) -> usize {
    4 + count_bits(version) + 8 * pos
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl BitReader<'_> {
    fn remaining(&self) -> usize {
        self.bytes.len() * 8 - self.pos
    }

    fn read(&mut self, width: usize) -> Option<u32> {
        if width > self.remaining() {
            return None;
        }
        let mut v = 0u32;
        for _ in 0..width {
            let bit = self.bytes[self.pos / 8] >> (7 - self.pos % 8) & 1;
            v = v << 1 | bit as u32;
            self.pos += 1;
        }
        Some(v)
    }
}

/// Extracts the payload from data codewords. Accepts a sequence of byte-mode
/// segments ended by a terminator or by running out of bits.
pub fn parse_data_segment(data: &[u8], version: u32) -> Result<Vec<u8>> {
    let cc = count_bits(version);
    let mut r = BitReader {
        bytes: data,
        pos: 0,
    };
    let mut out = Vec::new();
    while r.remaining() >= 4 {
        let mode = r.read(4).unwrap() as u8;
        match mode {
            0 => break,
            MODE_BYTE => {
                let len = r
                    .read(cc)
                    .ok_or_else(|| Error::BadFormat("truncated length field".into()))?;
                for _ in 0..len {
                    let b = r
                        .read(8)
                        .ok_or_else(|| Error::BadFormat("segment runs past data".into()))?;
                    out.push(b as u8);
                }
            }
            other => return Err(Error::UnsupportedMode(other)),
        }
    }
    Ok(out)
}
