//! Spanish NIF check letter: an 8-digit number followed by the letter for
//! its residue modulo 23.

use crate::error::{Error, Result};

/// Letter for each residue `0..23`.
pub const NIF_LETTERS: [char; 23] = [
    'T', 'R', 'W', 'A', 'G', 'M', 'Y', 'F', 'P', 'D', 'X', 'B', 'N', 'J', 'Z', 'S', 'Q', 'V', 'H',
    'L', 'C', 'K', 'E',
];

fn residue(digits: &str) -> Result<u32> {
    if digits.len() != 8 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::BadFormat(format!(
            "NIF needs exactly 8 decimal digits, got {digits:?}"
        )));
    }
    let value: u32 = digits
        .parse()
        .map_err(|_| Error::BadFormat(digits.to_string()))?;
    Ok(value % 23)
}

pub fn nif_control_letter(digits: &str) -> Result<char> {
    Ok(NIF_LETTERS[residue(digits)? as usize])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NifCheck {
    pub residue: u32,
    pub expected: char,
    pub received: char,
}

impl NifCheck {
    pub fn is_valid(&self) -> bool {
        self.expected == self.received.to_ascii_uppercase()
    }
}

/// Checks a received `digits-letter` pair.
pub fn nif_check(digits: &str, received: char) -> Result<NifCheck> {
    let r = residue(digits)?;
    Ok(NifCheck {
        residue: r,
        expected: NIF_LETTERS[r as usize],
        received,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters() {
        assert_eq!(nif_control_letter("51234511").unwrap(), 'X');
        assert_eq!(nif_control_letter("18279322").unwrap(), 'A');
        assert_eq!(nif_control_letter("00000000").unwrap(), 'T');
    }

    #[test]
    fn residues() {
        assert_eq!(nif_check("51234511", 'X').unwrap().residue, 10);
        let c = nif_check("18279322", 'G').unwrap();
        assert_eq!(c.residue, 3);
        assert!(!c.is_valid());
        assert!(nif_check("51234511", 'x').unwrap().is_valid());
    }

    #[test]
    fn bad_format() {
        for bad in ["1234567", "123456789", "1234567a", ""] {
            assert!(matches!(nif_control_letter(bad), Err(Error::BadFormat(_))));
        }
    }
}
