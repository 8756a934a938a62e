use std::fmt;

use serde::Serialize;

/// `sum_j coeffs[j] u^j` in the group ring `Z[Z_m]`, with nonnegative
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupRingElt {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl GroupRingElt {
    pub fn zero(modulus: u64) -> Self {
        GroupRingElt {
            modulus,
            coeffs: vec![0; modulus as usize],
        }
    }

    /// Coefficients are taken as given; the length fixes the modulus.
    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        GroupRingElt {
            modulus: coeffs.len() as u64,
            coeffs,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: u64) -> u64 {
        self.coeffs[(j % self.modulus) as usize]
    }

    /// Adds `u^exponent`.
    pub fn add_term(&mut self, exponent: u64) {
        self.coeffs[(exponent % self.modulus) as usize] += 1;
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Only the identity coefficient may be nonzero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().skip(1).all(|&c| c == 0)
    }

    /// Image under `u -> u^d` into `Z[Z_(m')]`, where exponents are read mod
    /// `target_modulus`.
    pub fn pushforward(&self, d: u64, target_modulus: u64) -> GroupRingElt {
        let mut out = GroupRingElt::zero(target_modulus);
        for (j, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[((j as u64 * d) % target_modulus) as usize] += c;
        }
        out
    }
}

impl fmt::Display for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}u")?,
                _ => write!(f, "{c}u^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constancy() {
        assert!(GroupRingElt::from_coeffs(vec![9, 0, 0]).is_constant());
        assert!(!GroupRingElt::from_coeffs(vec![1, 1]).is_constant());
        assert!(GroupRingElt::zero(4).is_constant());
    }

    #[test]
    fn display_and_pushforward() {
        let e = GroupRingElt::from_coeffs(vec![4, 0, 12, 0]);
        assert_eq!(e.to_string(), "4 + 12u^2");
        assert_eq!(e.total(), 16);
        assert_eq!(e.pushforward(1, 2).coeffs(), &[16, 0]);
        assert_eq!(GroupRingElt::zero(2).to_string(), "0");
    }
}
