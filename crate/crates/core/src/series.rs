//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order `K` stores the coefficients of `x^0..=x^K`. All ring
//! operations truncate at the common order; nothing is ever rounded.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::seqcore::{SeqEngine, SeqKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// A polynomial given by integer coefficients, truncated to `order`.
    pub fn polynomial(coeffs: &[i64], order: usize) -> Self {
        let mut s = Series::zero(order);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = BigRational::from_integer(BigInt::from(c));
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn scale(&self, factor: &BigRational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Coefficients as integers, failing at the first non-integral one.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral {
                        k,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// The square root with constant term 1 of a series whose constant term
    /// is 1, from the self-convolution `s * s = self`:
    /// `2 s_k = self_k - sum_{j=1}^{k-1} s_j s_{k-j}`.
    pub fn sqrt_unit(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain {
                what: "sqrt_unit (constant term must be 1)",
                n: 0,
                requirement: "c_0 = 1",
            });
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut s: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        s.push(BigRational::one());
        for k in 1..self.coeffs.len() {
            let cross = dot((1..k).map(|j| (&s[j], &s[k - j])));
            s.push((&self.coeffs[k] - cross) / &two);
        }
        Ok(Series { coeffs: s })
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }
}

/// `sum x_j * y_j`, skipping per-term normalization when every factor is an
/// integer.
fn dot<'a>(pairs: impl Iterator<Item = (&'a BigRational, &'a BigRational)> + Clone) -> BigRational {
    if pairs.clone().all(|(x, y)| x.is_integer() && y.is_integer()) {
        let sum = pairs.fold(BigInt::zero(), |acc, (x, y)| acc + x.numer() * y.numer());
        BigRational::from_integer(sum)
    } else {
        pairs.fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
    }
}

pub fn series_add(a: &Series, b: &Series) -> Result<Series> {
    a.check_order(b)?;
    Ok(Series {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
    })
}

pub fn series_sub(a: &Series, b: &Series) -> Result<Series> {
    a.check_order(b)?;
    Ok(Series {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
    })
}

pub fn series_mul(a: &Series, b: &Series) -> Result<Series> {
    a.check_order(b)?;
    let coeffs = (0..a.coeffs.len())
        .map(|k| dot((0..=k).map(|j| (&a.coeffs[j], &b.coeffs[k - j]))))
        .collect();
    Ok(Series { coeffs })
}

/// `a / b`; `b` must have a nonzero constant term.
pub fn series_div(a: &Series, b: &Series) -> Result<Series> {
    a.check_order(b)?;
    let lead = &b.coeffs[0];
    if lead.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let mut q: Vec<BigRational> = Vec::with_capacity(a.coeffs.len());
    for k in 0..a.coeffs.len() {
        let known = dot((1..=k).map(|j| (&b.coeffs[j], &q[k - j])));
        q.push((&a.coeffs[k] - known) / lead);
    }
    Ok(Series { coeffs: q })
}

/// `sqrt(1 - 4x)` to order `order`; every coefficient is an integer.
pub fn sqrt_one_minus_4x(order: usize) -> Series {
    Series::polynomial(&[1, -4], order)
        .sqrt_unit()
        .expect("1 - 4x has constant term 1")
}

/// `C(x) = (1 - sqrt(1 - 4x)) / 2 = sum C_n x^n`.
pub fn catalan_gf(order: usize) -> Series {
    let one = Series::polynomial(&[1], order);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    series_sub(&one, &sqrt_one_minus_4x(order))
        .expect("same order")
        .scale(&half)
}

/// `N(x) = x / (1 - x)^2 = sum n x^n`.
pub fn naturals_gf(order: usize) -> Series {
    series_div(
        &Series::polynomial(&[0, 1], order),
        &Series::polynomial(&[1, -2, 1], order),
    )
    .expect("(1 - x)^2 has constant term 1")
}

/// The closed form for the Catalan-tree component counts,
///
/// `A(x) = [2x^2 (2 - x) + (1 - x)^2 (1 - sqrt(1 - 4x))] / [2 (1 - x)^2]`,
///
/// assembled term by term and checked to have integer coefficients.
pub fn expand_a_closed_form(order: usize) -> Result<Series> {
    let poly = |c: &[i64]| Series::polynomial(c, order);
    // 2x^2 (2 - x) = 4x^2 - 2x^3
    let polynomial_part = poly(&[0, 0, 4, -2]);
    let one_minus_x_sq = poly(&[1, -2, 1]);
    let radical_part = series_mul(
        &one_minus_x_sq,
        &series_sub(&poly(&[1]), &sqrt_one_minus_4x(order))?,
    )?;
    let numerator = series_add(&polynomial_part, &radical_part)?;
    let denominator = poly(&[2, -4, 2]);
    let a = series_div(&numerator, &denominator)?;
    a.integer_coeffs()?;
    Ok(a)
}

/// Per-index comparison of `s` against the exact sequence values.
pub fn compare_with_sequence(s: &Series, kind: SeqKind, engine: &SeqEngine) -> Vec<(usize, bool)> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let expected = BigInt::from(BigUint::clone(engine.value(kind, k).as_biguint()));
            let matches = c.is_integer() && !c.is_negative() && c.to_integer() == expected;
            (k, matches)
        })
        .collect()
}
