//! Numerical data of the rank-2 Schwarzenberger bundles `V_k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::CoHiggsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Splitting {
    /// `O ⊕ O(−1)` (k = 0).
    #[serde(rename = "O+O(-1)")]
    OPlusOMinus1,
    /// `O ⊕ O` (k = 1).
    #[serde(rename = "O+O")]
    OPlusO,
    /// The tangent bundle (k = 2).
    #[serde(rename = "T")]
    Tangent,
    /// No splitting; the bundle is stable with `k² − 4` moduli of trace-free endomorphisms.
    #[serde(rename = "generic")]
    Generic,
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Splitting::OPlusOMinus1 => "O+O(-1)",
            Splitting::OPlusO => "O+O",
            Splitting::Tangent => "T",
            Splitting::Generic => "generic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchwarzInfo {
    pub k: u32,
    pub c1: i64,
    pub c2: i64,
    pub splitting: Splitting,
    pub h1_end0: i64,
}

pub fn schwarz_info(k: u32) -> Result<SchwarzInfo, CoHiggsError> {
    if k == 3 {
        return Err(CoHiggsError::ExcludedIndex);
    }
    let kk = k as i64;
    let splitting = match k {
        0 => Splitting::OPlusOMinus1,
        1 => Splitting::OPlusO,
        2 => Splitting::Tangent,
        _ => Splitting::Generic,
    };
    let h1_end0 = if k <= 2 { 0 } else { kk * kk - 4 };
    Ok(SchwarzInfo { k, c1: kk - 1, c2: kk * (kk - 1) / 2, splitting, h1_end0 })
}

impl fmt::Display for SchwarzInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k = {}", self.k)?;
        writeln!(f, "c1 = {}", self.c1)?;
        writeln!(f, "c2 = {}", self.c2)?;
        writeln!(f, "splitting = {}", self.splitting)?;
        write!(f, "h1(End0) = {}", self.h1_end0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table() {
        let i0 = schwarz_info(0).unwrap();
        assert_eq!((i0.c1, i0.c2, i0.splitting), (-1, 0, Splitting::OPlusOMinus1));
        let i2 = schwarz_info(2).unwrap();
        assert_eq!((i2.c1, i2.c2, i2.splitting), (1, 1, Splitting::Tangent));
        assert_eq!(schwarz_info(5).unwrap().h1_end0, 21);
        assert_eq!(schwarz_info(3), Err(CoHiggsError::ExcludedIndex));
    }
}
