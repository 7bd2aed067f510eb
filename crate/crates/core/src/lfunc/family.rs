use crate::charsums::{prime_char_table, residue_index};
use crate::error::{Error, Result};
use crate::ffpoly::{enumerate_monic, factorize, FieldSpec, MonicPoly, PrimeList};

use super::LPolynomial;

/// Fast L-polynomials across H_{2g+1}: χ_D on primes of degree ≤ g by table
/// lookup, extended multiplicatively over M_{≤g}; the upper half of the
/// coefficients comes from the functional equation.
pub struct LFamily {
    fld: FieldSpec,
    g: usize,
    primes: Vec<MonicPoly>,
    tables: Vec<Vec<i8>>,
    /// split[n][k] = (prime id, cofactor degree, cofactor index) for the k-th f ∈ M_n
    split: Vec<Vec<(u32, u8, u32)>>,
}

impl LFamily {
    pub fn new(fld: &FieldSpec, g: usize) -> Self {
        let plist = PrimeList::new(fld, g.max(1));
        let primes: Vec<MonicPoly> = plist.iter().cloned().collect();
        let tables = primes.iter().map(|p| prime_char_table(p, fld)).collect();
        let mut split = vec![Vec::new()];
        for n in 1..=g {
            let row = enumerate_monic(fld, n)
                .map(|f| {
                    let fx = factorize(&f, fld).expect("degree ≥ 1");
                    let p = &fx.factors[0].0;
                    let pid = primes.binary_search(p).expect("prime listed") as u32;
                    let co = f.div_exact(p, fld).expect("factor divides");
                    (pid, co.degree() as u8, co.index(fld) as u32)
                })
                .collect();
            split.push(row);
        }
        LFamily {
            fld: fld.clone(),
            g,
            primes,
            tables,
            split,
        }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn field(&self) -> &FieldSpec {
        &self.fld
    }

    /// c_0..c_g for D.
    pub fn low_coeffs(&self, d: &MonicPoly) -> Vec<i64> {
        self.analyze(d).0
    }

    /// c_0..c_g together with z[m] = #{P | D : d(P) = m}, m = 0..=d(D).
    ///
    /// Primes of degree ≤ g dividing D show up as zeros of χ_D; at most one
    /// prime of degree > g can divide a squarefree D of degree 2g+1.
    pub fn analyze(&self, d: &MonicPoly) -> (Vec<i64>, Vec<u32>) {
        let fld = &self.fld;
        let chi_p: Vec<i8> = self
            .primes
            .iter()
            .zip(&self.tables)
            .map(|(p, t)| t[residue_index(&d.poly().rem(p.poly(), fld), fld)])
            .collect();
        let mut z = vec![0u32; d.degree() + 1];
        let mut used = 0;
        for (p, &c) in self.primes.iter().zip(&chi_p) {
            if c == 0 {
                z[p.degree()] += 1;
                used += p.degree();
            }
        }
        if used < d.degree() {
            debug_assert!(d.degree() - used > self.g);
            z[d.degree() - used] += 1;
        }
        let mut vals: Vec<Vec<i8>> = vec![vec![1]];
        let mut c = vec![1i64];
        for n in 1..=self.g {
            let row: Vec<i8> = self.split[n]
                .iter()
                .map(|&(pid, cd, ci)| chi_p[pid as usize] * vals[cd as usize][ci as usize])
                .collect();
            c.push(row.iter().map(|&v| v as i64).sum());
            vals.push(row);
        }
        (c, z)
    }

    pub fn l_polynomial(&self, d: &MonicPoly) -> Result<LPolynomial> {
        if d.degree() != 2 * self.g + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected degree {}, got {}",
                2 * self.g + 1,
                d.degree()
            )));
        }
        Ok(LPolynomial::from_low_half(self.fld.q(), &self.low_coeffs(d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::enumerate_squarefree;
    use crate::lfunc::l_polynomial;

    #[test]
    fn fast_path_matches_direct() {
        for (q, g, step) in [(5, 1, 1), (5, 2, 7), (13, 1, 5), (13, 2, 997)] {
            let f = FieldSpec::new(q).unwrap();
            let fam = LFamily::new(&f, g);
            for d in enumerate_squarefree(&f, 2 * g + 1).step_by(step) {
                assert_eq!(fam.l_polynomial(&d).unwrap(), l_polynomial(&d, &f).unwrap());
                let (_, z) = fam.analyze(&d);
                let fx = factorize(&d, &f).unwrap();
                for m in 1..=d.degree() {
                    let cnt = fx.factors.iter().filter(|(p, _)| p.degree() == m).count();
                    assert_eq!(z[m] as usize, cnt, "{d}");
                }
            }
        }
    }
}
