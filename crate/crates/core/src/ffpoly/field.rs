use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The prime field F_q with q = 1 mod 4.
///
/// Inverse and quadratic-character tables are shared between clones.
#[derive(Clone)]
pub struct FieldSpec {
    q: u32,
    inv: Arc<[u32]>,
    leg: Arc<[i8]>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn new(q: u64) -> Result<Self> {
        if q >= 1 << 16 || !is_prime(q) || q % 4 != 1 {
            return Err(Error::InvalidField(q));
        }
        let q32 = q as u32;
        let mut inv = vec![0u32; q as usize];
        for a in 1..q {
            // a^{q-2}
            inv[a as usize] = pow_mod(a, q - 2, q) as u32;
        }
        let mut leg = vec![-1i8; q as usize];
        leg[0] = 0;
        for a in 1..q {
            leg[((a * a) % q) as usize] = 1;
        }
        Ok(FieldSpec {
            q: q32,
            inv: inv.into(),
            leg: leg.into(),
        })
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a * b) % self.q
    }

    /// Panics on zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u32 {
        a.rem_euclid(self.q as i64) as u32
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        pow_mod(a as u64, e, self.q as u64) as u32
    }

    /// Legendre symbol (a/q) in {-1, 0, 1}.
    #[inline]
    pub fn legendre(&self, a: u32) -> i8 {
        self.leg[a as usize]
    }

    /// q^n as an exact integer.
    pub fn norm(&self, n: u32) -> u128 {
        (self.q as u128).pow(n)
    }
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    r
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FieldSpec {}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.q)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let q = u64::deserialize(d)?;
        FieldSpec::new(q).map_err(serde::de::Error::custom)
    }
}
