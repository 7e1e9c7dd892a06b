use crate::error::{Error, Result};
use crate::qr::CodewordSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffRow {
    /// Wire-order codeword index.
    pub index: usize,
    pub block: usize,
    /// Offset inside the block's `data ‖ ec`.
    pub offset: usize,
    pub original: u8,
    pub target: u8,
    pub bit_cost: u32,
    pub is_data: bool,
}

impl DiffRow {
    pub fn xor(&self) -> u8 {
        self.original ^ self.target
    }
}

/// Codeword positions where two symbols differ, in wire order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffReport {
    pub rows: Vec<DiffRow>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn total_bits(&self) -> u32 {
        self.rows.iter().map(|r| r.bit_cost).sum()
    }

    /// Rows belonging to one block.
    pub fn block(&self, block: usize) -> impl Iterator<Item = &DiffRow> {
        self.rows.iter().filter(move |r| r.block == block)
    }
}

pub fn codeword_diff(a: &CodewordSet, b: &CodewordSet) -> Result<DiffReport> {
    if !a.same_config(b) {
        return Err(Error::ConfigMismatch);
    }
    let layout = a.layout();
    let rows = a
        .interleaved
        .iter()
        .zip(&b.interleaved)
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(index, (&original, &target))| {
            let (block, offset) = layout.locate(index);
            DiffRow {
                index,
                block,
                offset,
                original,
                target,
                bit_cost: (original ^ target).count_ones(),
                is_data: offset < layout.blocks[block].data_len,
            }
        })
        .collect();
    Ok(DiffReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qr::{encode, EcLevel, QrConfig};

    #[test]
    fn v1q_pair() {
        let cfg = QrConfig::new(1, EcLevel::Q).unwrap();
        let a = encode(b"Id: 1234567", &cfg).unwrap();
        let b = encode(b"Id: 1234566", &cfg).unwrap();
        let d = codeword_diff(&a, &b).unwrap();
        let idx: Vec<usize> = d.rows.iter().map(|r| r.index).collect();
        assert_eq!(idx, (12..26).collect::<Vec<_>>());
        let costs: Vec<u32> = d.rows.iter().map(|r| r.bit_cost).collect();
        assert_eq!(costs, [1, 4, 4, 4, 3, 7, 3, 5, 3, 5, 3, 4, 3, 5]);
        assert_eq!(d.total_bits(), 54);
        assert!(codeword_diff(&a, &a).unwrap().is_empty());
    }

    #[test]
    fn mismatched_configs() {
        let a = encode(b"x", &QrConfig::new(1, EcLevel::Q).unwrap()).unwrap();
        let b = encode(b"x", &QrConfig::new(1, EcLevel::L).unwrap()).unwrap();
        assert_eq!(codeword_diff(&a, &b), Err(Error::ConfigMismatch));
    }
}
