//! Truncated Laurent series in u and Perron-style coefficient extraction.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::parallel::CompensatedSum;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Σ_{n=lo}^{order} c_n u^n. Coefficients below `lo` are either exactly zero
/// (lo = 0 for ordinary power series) or a discarded tail that is negligible
/// on the integration contour. Coefficients above `order` are unknown.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    lo: i64,
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn zero(order: i64) -> Self {
        Self::window(0, order)
    }

    /// All-zero series on the window [lo, order].
    pub fn window(lo: i64, order: i64) -> Self {
        let len = (order - lo + 1).max(0) as usize;
        PowerSeries {
            lo,
            coeffs: vec![ZERO; len],
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(0, Complex64::new(1.0, 0.0), order)
    }

    pub fn monomial(k: i64, c: Complex64, order: i64) -> Self {
        let mut s = Self::window(k.min(0), order);
        s.add_at(k, c);
        s
    }

    pub fn from_coeffs(lo: i64, coeffs: Vec<Complex64>) -> Self {
        PowerSeries { lo, coeffs }
    }

    /// 1/(1 − c·u^step) = Σ_{k≥0} c^k u^{k·step}, step > 0.
    pub fn geometric(c: Complex64, step: i64, order: i64) -> Self {
        assert!(step > 0);
        let mut s = Self::zero(order);
        let mut p = Complex64::new(1.0, 0.0);
        let mut e = 0;
        while e <= order {
            s.add_at(e, p);
            p *= c;
            e += step;
        }
        s
    }

    /// Σ_{k≥0} c^k u^{−k·step} kept down to `lo`, then the window extends to `order`.
    pub fn geometric_inverse(c: Complex64, step: i64, lo: i64, order: i64) -> Self {
        assert!(step > 0);
        let mut s = Self::window(lo, order);
        let mut p = Complex64::new(1.0, 0.0);
        let mut e = 0;
        while e >= lo {
            if e <= order {
                s.add_at(e, p);
            }
            p *= c;
            e -= step;
        }
        s
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn order(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, n: i64) -> Complex64 {
        if n < self.lo || n > self.order() {
            ZERO
        } else {
            self.coeffs[(n - self.lo) as usize]
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn add_at(&mut self, n: i64, c: Complex64) {
        if n >= self.lo && n <= self.order() {
            self.coeffs[(n - self.lo) as usize] += c;
        }
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let lo = self.lo.min(other.lo);
        let hi = self.order().min(other.order());
        let coeffs = (lo..=hi).map(|n| self.coeff(n) + other.coeff(n)).collect();
        PowerSeries { lo, coeffs }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> PowerSeries {
        PowerSeries {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by u^k.
    pub fn shift(&self, k: i64) -> PowerSeries {
        PowerSeries {
            lo: self.lo + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn truncate(&self, order: i64) -> PowerSeries {
        let hi = order.min(self.order());
        PowerSeries {
            lo: self.lo,
            coeffs: (self.lo..=hi).map(|n| self.coeff(n)).collect(),
        }
    }

    /// Drops coefficients below `lo`.
    pub fn floor(&self, lo: i64) -> PowerSeries {
        if lo <= self.lo {
            return self.clone();
        }
        PowerSeries {
            lo,
            coeffs: (lo..=self.order()).map(|n| self.coeff(n)).collect(),
        }
    }

    /// Product. The result is known up to min(order_a + lo_b, order_b + lo_a)
    /// and is kept down to the deeper of the two input windows.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let hi = (self.order() + other.lo).min(other.order() + self.lo);
        let lo = (self.lo + other.lo).max(self.lo.min(other.lo));
        let mut out = PowerSeries::window(lo, hi);
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == ZERO {
                continue;
            }
            let ea = self.lo + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ea + other.lo + j as i64;
                if e > hi {
                    break;
                }
                out.add_at(e, a * b);
            }
        }
        out
    }

    /// Reciprocal of a power series with nonzero constant term.
    pub fn inv(&self) -> Result<PowerSeries> {
        if self.lo < 0 && self.coeffs[..(-self.lo) as usize].iter().any(|c| *c != ZERO) {
            return Err(Error::InvalidArgument(
                "reciprocal needs an ordinary power series".into(),
            ));
        }
        let c0 = self.coeff(0);
        if c0.norm() == 0.0 {
            return Err(Error::InvalidArgument(
                "reciprocal needs a nonzero constant term".into(),
            ));
        }
        let hi = self.order();
        let mut out = vec![ZERO; (hi + 1).max(0) as usize];
        for n in 0..=hi {
            let mut acc = if n == 0 { Complex64::new(1.0, 0.0) } else { ZERO };
            for k in 1..=n {
                acc -= self.coeff(k) * out[(n - k) as usize];
            }
            out[n as usize] = acc / c0;
        }
        Ok(PowerSeries { lo: 0, coeffs: out })
    }

    pub fn div(&self, other: &PowerSeries) -> Result<PowerSeries> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn eval(&self, u: Complex64) -> Complex64 {
        let mut acc = CompensatedSum::default();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc.add(c * u.powi((self.lo + i as i64) as i32));
        }
        acc.value()
    }

    /// Laurent coefficients on [lo, order] of a function analytic on the
    /// circle |u| = radius, by the discrete Fourier transform over `points` nodes.
    pub fn from_contour(
        f: impl Fn(Complex64) -> Complex64,
        radius: f64,
        points: usize,
        lo: i64,
        order: i64,
    ) -> PowerSeries {
        let m = points as f64;
        let nodes: Vec<(Complex64, Complex64)> = (0..points)
            .map(|k| {
                let u = Complex64::from_polar(radius, 2.0 * PI * k as f64 / m);
                (u, f(u))
            })
            .collect();
        let coeffs = (lo..=order)
            .map(|n| {
                let mut acc = CompensatedSum::default();
                for (k, (_, v)) in nodes.iter().enumerate() {
                    let ang = -2.0 * PI * ((k as i64 * n).rem_euclid(points as i64)) as f64 / m;
                    acc.add(v * Complex64::from_polar(radius.powi(-n as i32), ang));
                }
                acc.value() / m
            })
            .collect();
        PowerSeries { lo, coeffs }
    }
}

/// Σ_{n ≤ N} c_n, the value of (1/2πi)∮ F(u) du/(u^{N+1}(1−u)) on a circle
/// inside |u| < 1 where the Laurent expansion of F is valid.
pub fn perron_extract(f: &PowerSeries, n: i64) -> Result<Complex64> {
    if n > f.order() {
        return Err(Error::InvalidArgument(format!(
            "extraction degree {n} exceeds the series order {}",
            f.order()
        )));
    }
    let mut acc = CompensatedSum::default();
    for k in f.lo()..=n {
        acc.add(f.coeff(k));
    }
    Ok(acc.value())
}

/// The same contour integral by the trapezoidal rule on |u| = radius.
pub fn contour_extract(
    f: impl Fn(Complex64) -> Complex64,
    n: i64,
    radius: f64,
    points: usize,
) -> Complex64 {
    let m = points as f64;
    let mut acc = CompensatedSum::default();
    for k in 0..points {
        let u = Complex64::from_polar(radius, 2.0 * PI * k as f64 / m);
        acc.add(f(u) * u.powi(-n as i32) / (1.0 - u));
    }
    acc.value() / m
}
