use super::{block_layout, build_data_segment, BlockLayout, EcLevel, QrConfig};
use crate::error::{Error, Result};
use crate::rs::RsParams;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub data: Vec<u8>,
    pub ec: Vec<u8>,
}

impl Block {
    /// `data ‖ ec`.
    pub fn combined(&self) -> Vec<u8> {
        let mut v = self.data.clone();
        v.extend_from_slice(&self.ec);
        v
    }
}

/// The codewords of one symbol: per-block data and parity plus the
/// interleaved wire order that gets placed in the matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodewordSet {
    pub version: u32,
    pub ec_level: EcLevel,
    pub text: Vec<u8>,
    pub blocks: Vec<Block>,
    pub interleaved: Vec<u8>,
}

impl CodewordSet {
    pub fn layout(&self) -> BlockLayout {
        block_layout(self.version, self.ec_level).expect("version checked at encode")
    }

    pub fn same_config(&self, other: &CodewordSet) -> bool {
        self.version == other.version && self.ec_level == other.ec_level
    }

    pub fn total_bits(&self) -> usize {
        self.interleaved.len() * 8
    }

    /// Rebuilds a set from wire-order bytes without decoding.
    pub fn from_interleaved(version: u32, ec_level: EcLevel, wire: &[u8]) -> Result<CodewordSet> {
        let layout = block_layout(version, ec_level)?;
        let blocks = layout
            .deinterleave(wire)?
            .into_iter()
            .zip(&layout.blocks)
            .map(|(mut b, spec)| {
                let ec = b.split_off(spec.data_len);
                Block { data: b, ec }
            })
            .collect();
        Ok(CodewordSet {
            version,
            ec_level,
            text: Vec::new(),
            blocks,
            interleaved: wire.to_vec(),
        })
    }
}

/// Segment, split into blocks, add RS parity per block, interleave.
pub fn encode(text: &[u8], config: &QrConfig) -> Result<CodewordSet> {
    let layout = block_layout(config.version, config.ec_level)?;
    let segment = build_data_segment(text, config)?;
    let mut blocks = Vec::with_capacity(layout.blocks.len());
    let mut offset = 0;
    let mut rs: Option<RsParams<'static>> = None;
    for spec in &layout.blocks {
        let data = segment.codewords[offset..offset + spec.data_len].to_vec();
        offset += spec.data_len;
        let params = match &rs {
            Some(p) if p.k() == spec.data_len => p,
            _ => rs.insert(RsParams::qr(spec.len(), spec.data_len)?),
        };
        let ec = params.encode_bytes(&data)?;
        blocks.push(Block { data, ec });
    }
    if offset != segment.codewords.len() {
        return Err(Error::LayoutMismatch(
            "segment length differs from layout".into(),
        ));
    }
    let combined: Vec<Vec<u8>> = blocks.iter().map(Block::combined).collect();
    let interleaved = layout.interleave(&combined)?;
    Ok(CodewordSet {
        version: config.version,
        ec_level: config.ec_level,
        text: text.to_vec(),
        blocks,
        interleaved,
    })
}
