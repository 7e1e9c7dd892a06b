use serde::{Deserialize, Serialize};

use super::{CodewordSet, EcLevel, ModuleMatrix};
use crate::error::{Error, Result};

/// Light border, in modules, added around rendered symbols.
pub const QUIET_ZONE: usize = 4;

/// Plain (P1) bitmap, one pixel per module, `1` = dark.
pub fn to_pbm(m: &ModuleMatrix) -> String {
    let full = m.size() + 2 * QUIET_ZONE;
    let mut out = format!("P1\n{full} {full}\n");
    for y in 0..full {
        let row: Vec<&str> = (0..full)
            .map(|x| {
                let inside = (QUIET_ZONE..QUIET_ZONE + m.size()).contains(&x)
                    && (QUIET_ZONE..QUIET_ZONE + m.size()).contains(&y);
                if inside && m.get(y - QUIET_ZONE, x - QUIET_ZONE) {
                    "1"
                } else {
                    "0"
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Reads a P1 bitmap at one pixel per module. Any light border is cropped
/// to the bounding box of dark pixels, which the finder patterns pin to the
/// symbol edges.
pub fn parse_pbm(text: &str) -> Result<ModuleMatrix> {
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    if tokens.next() != Some("P1") {
        return Err(Error::BadFormat("expected a P1 bitmap".into()));
    }
    let mut dim = || -> Result<usize> {
        tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::BadFormat("missing bitmap dimensions".into()))
    };
    let (w, h) = (dim()?, dim()?);
    let pixels: Vec<bool> = tokens
        .flat_map(str::chars)
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::BadFormat(format!(
                "unexpected pixel character {c:?}"
            ))),
        })
        .collect::<Result<_>>()?;
    if pixels.len() != w * h {
        return Err(Error::BadFormat(format!(
            "expected {} pixels, found {}",
            w * h,
            pixels.len()
        )));
    }
    let dark = |i: &usize| pixels[*i];
    let idx: Vec<usize> = (0..w * h).filter(dark).collect();
    let (Some(x0), Some(x1)) = (
        idx.iter().map(|i| i % w).min(),
        idx.iter().map(|i| i % w).max(),
    ) else {
        return Err(Error::BadFormat("bitmap has no dark pixels".into()));
    };
    let y0 = idx[0] / w;
    let y1 = idx[idx.len() - 1] / w;
    let size = x1 - x0 + 1;
    if y1 - y0 + 1 != size {
        return Err(Error::BadFormat("symbol is not square".into()));
    }
    let mut modules = Vec::with_capacity(size * size);
    for y in y0..=y1 {
        modules.extend_from_slice(&pixels[y * w + x0..=y * w + x1]);
    }
    ModuleMatrix::from_modules(size, modules)
}

/// Two characters per module, dark as `██`, with the quiet zone.
pub fn to_ascii(m: &ModuleMatrix) -> String {
    let full = m.size() + 2 * QUIET_ZONE;
    let mut out = String::new();
    for y in 0..full {
        for x in 0..full {
            let dark = x >= QUIET_ZONE
                && y >= QUIET_ZONE
                && x < QUIET_ZONE + m.size()
                && y < QUIET_ZONE + m.size()
                && m.get(y - QUIET_ZONE, x - QUIET_ZONE);
            out.push_str(if dark { "██" } else { "  " });
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub data: Vec<u8>,
    pub ec: Vec<u8>,
}

/// Serializable view of a codeword set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodewordJson {
    pub version: u32,
    pub ec: EcLevel,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mask: Option<u8>,
    pub text: String,
    pub blocks: Vec<BlockJson>,
    pub interleaved: Vec<u8>,
}

impl CodewordJson {
    pub fn new(set: &CodewordSet, mask: Option<u8>) -> CodewordJson {
        CodewordJson {
            version: set.version,
            ec: set.ec_level,
            mask,
            text: String::from_utf8_lossy(&set.text).into_owned(),
            blocks: set
                .blocks
                .iter()
                .map(|b| BlockJson {
                    data: b.data.clone(),
                    ec: b.ec.clone(),
                })
                .collect(),
            interleaved: set.interleaved.clone(),
        }
    }
}
