//! The polynomial sequences L_n and A_n and one checker per identity.
//!
//! L_{-1} = 0, L_0 = 1, L_1 = a, L_n = a L_{n-1} - L_{n-2};
//! A_n = a L_{n-1} - 2 L_{n-2} - 2 = L_n - L_{n-2} - 2, monic of degree n.
//!
//! The extended bases L_{-1}, L_0 are forced by the identities themselves
//! (product lemma at k = n, A_n at n = 1, 2) even though the printed tables
//! start at L_1.

use crate::polyalg::IntPoly;
use crate::report::{Counterexample, VerificationReport};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("index {index} out of range for {sequence} (minimum {min})")]
    Index {
        sequence: &'static str,
        index: i64,
        min: i64,
    },
    #[error("invalid parameter range: {0}")]
    Range(String),
}

/// Append-only memo of the L and A sequences.
#[derive(Debug, Default)]
pub struct SequenceCache {
    l: Vec<IntPoly>, // l[i] = L_{i-1}
    a: Vec<IntPoly>, // a[i] = A_{i+1}
}

impl SequenceCache {
    pub fn new() -> Self {
        SequenceCache::default()
    }

    /// L_n for n >= -1.
    pub fn l(&mut self, n: i64) -> Result<IntPoly, SequenceError> {
        if n < -1 {
            return Err(SequenceError::Index {
                sequence: "L",
                index: n,
                min: -1,
            });
        }
        let idx = (n + 1) as usize;
        if self.l.is_empty() {
            self.l.push(IntPoly::zero()); // L_{-1}
            self.l.push(IntPoly::one()); // L_0
        }
        while self.l.len() <= idx {
            let m = self.l.len();
            let next = if m == 2 {
                IntPoly::var() // L_1
            } else {
                &(&IntPoly::var() * &self.l[m - 1]) - &self.l[m - 2]
            };
            self.l.push(next);
        }
        Ok(self.l[idx].clone())
    }

    /// A_n for n >= 1, from A_n = a L_{n-1} - 2 L_{n-2} - 2.
    pub fn a(&mut self, n: i64) -> Result<IntPoly, SequenceError> {
        if n < 1 {
            return Err(SequenceError::Index {
                sequence: "A",
                index: n,
                min: 1,
            });
        }
        let idx = (n - 1) as usize;
        while self.a.len() <= idx {
            let m = self.a.len() as i64 + 1;
            let l1 = self.l(m - 1)?;
            let l2 = self.l(m - 2)?;
            let two = IntPoly::constant(2);
            let next = &(&(&IntPoly::var() * &l1) - &l2.scale(&BigInt::from(2))) - &two;
            self.a.push(next);
        }
        Ok(self.a[idx].clone())
    }

    /// A_n by the three-term recurrence A_n = a A_{n-1} - A_{n-2} + 2 A_1.
    /// Independent route; must agree with `a(n)` exactly.
    pub fn a_via_three_term(&mut self, n: i64) -> Result<IntPoly, SequenceError> {
        if n < 1 {
            return Err(SequenceError::Index {
                sequence: "A",
                index: n,
                min: 1,
            });
        }
        let a1 = IntPoly::from_i64s(&[-2, 1]);
        let a2 = IntPoly::from_i64s(&[-4, 0, 1]);
        match n {
            1 => return Ok(a1),
            2 => return Ok(a2),
            _ => {}
        }
        let two_a1 = a1.scale(&BigInt::from(2));
        let (mut prev, mut cur) = (a1, a2);
        for _ in 3..=n {
            let next = &(&(&IntPoly::var() * &cur) - &prev) + &two_a1;
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    fn equality_report(
        id: &str,
        params: Vec<i64>,
        lhs: IntPoly,
        rhs: IntPoly,
    ) -> VerificationReport {
        if lhs == rhs {
            VerificationReport::pass(id, vec![params])
        } else {
            VerificationReport::fail(
                id,
                vec![params.clone()],
                Counterexample {
                    parameters: params,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                },
            )
        }
    }

    /// L_n = L_{n-k} L_k - L_{n-k-1} L_{k-1}.
    pub fn check_l_product(&mut self, n: i64, k: i64) -> Result<VerificationReport, SequenceError> {
        if !(1 <= k && k <= n) {
            return Err(SequenceError::Range(format!(
                "l-product needs 1 <= k <= n, got n={n}, k={k}"
            )));
        }
        let lhs = self.l(n)?;
        let rhs = &(&self.l(n - k)? * &self.l(k)?) - &(&self.l(n - k - 1)? * &self.l(k - 1)?);
        Ok(Self::equality_report("l-product", vec![n, k], lhs, rhs))
    }

    /// L_{n-1}^2 = L_{n-2} L_n + 1, and the rearrangement
    /// L_{n-1}^2 + L_{n-2}^2 - 1 = a L_{n-1} L_{n-2}.
    pub fn check_l_square(&mut self, n: i64) -> Result<VerificationReport, SequenceError> {
        if n < 2 {
            return Err(SequenceError::Range(format!("l-square needs n >= 2, got {n}")));
        }
        let one = IntPoly::one();
        let (l0, l1, l2) = (self.l(n - 2)?, self.l(n - 1)?, self.l(n)?);
        let square = Self::equality_report(
            "l-square",
            vec![n],
            &l1 * &l1,
            &(&l0 * &l2) + &one,
        );
        if !square.passed {
            return Ok(square);
        }
        let lhs = &(&(&l1 * &l1) + &(&l0 * &l0)) - &one;
        let rhs = &(&IntPoly::var() * &l1) * &l0;
        Ok(Self::equality_report("l-square", vec![n], lhs, rhs))
    }

    /// A_{2n} = A_n (A_n + 4).
    pub fn check_doubling(&mut self, n: i64) -> Result<VerificationReport, SequenceError> {
        if n < 1 {
            return Err(SequenceError::Range(format!("doubling needs n >= 1, got {n}")));
        }
        let an = self.a(n)?;
        let lhs = self.a(2 * n)?;
        let rhs = &an * &(&an + &IntPoly::constant(4));
        Ok(Self::equality_report("doubling", vec![n], lhs, rhs))
    }

    /// A_n | A_{kn}, plus the step identity
    /// A_{(k+1)n} = (A_n + 2) A_{kn} + 2 A_n - A_{(k-1)n} for k >= 2.
    pub fn check_divisibility(&mut self, n: i64, k: i64) -> Result<VerificationReport, SequenceError> {
        if n < 1 || k < 1 {
            return Err(SequenceError::Range(format!(
                "divisibility needs n, k >= 1, got n={n}, k={k}"
            )));
        }
        let an = self.a(n)?;
        let akn = self.a(k * n)?;
        let (_, rem) = akn.divrem(&an).expect("A_n is nonzero");
        if !rem.is_zero() {
            return Ok(VerificationReport::fail(
                "divisibility",
                vec![vec![n, k]],
                Counterexample {
                    parameters: vec![n, k],
                    lhs: format!("A_{} mod A_{}", k * n, n),
                    rhs: rem.to_string(),
                },
            ));
        }
        if k >= 2 {
            let lhs = self.a((k + 1) * n)?;
            let rhs = &(&(&(&an + &IntPoly::constant(2)) * &akn)
                + &an.scale(&BigInt::from(2)))
                - &self.a((k - 1) * n)?;
            return Ok(Self::equality_report("divisibility", vec![n, k], lhs, rhs));
        }
        Ok(VerificationReport::pass("divisibility", vec![vec![n, k]]))
    }

    /// A_{n+p} = A_n (A_p + 2) + 2 A_p - A_{n-p}, for p < n.
    pub fn check_addition(&mut self, n: i64, p: i64) -> Result<VerificationReport, SequenceError> {
        if !(1 <= p && p < n) {
            return Err(SequenceError::Range(format!(
                "addition needs 1 <= p < n, got n={n}, p={p}"
            )));
        }
        let lhs = self.a(n + p)?;
        let ap = self.a(p)?;
        let rhs = &(&(&self.a(n)? * &(&ap + &IntPoly::constant(2)))
            + &ap.scale(&BigInt::from(2)))
            - &self.a(n - p)?;
        Ok(Self::equality_report("addition", vec![n, p], lhs, rhs))
    }

    /// A_{kn+p} = (A_p + 2) A_{kn} + 2 A_p - A_{kn-p}.
    pub fn check_shifted_addition(
        &mut self,
        k: i64,
        n: i64,
        p: i64,
    ) -> Result<VerificationReport, SequenceError> {
        if k < 1 || n < 2 || !(1 <= p && p < n) || k * n - p < 1 {
            return Err(SequenceError::Range(format!(
                "shifted-addition needs k >= 1, n >= 2, 1 <= p < n, kn-p >= 1; got k={k}, n={n}, p={p}"
            )));
        }
        let lhs = self.a(k * n + p)?;
        let ap = self.a(p)?;
        let rhs = &(&(&(&ap + &IntPoly::constant(2)) * &self.a(k * n)?)
            + &ap.scale(&BigInt::from(2)))
            - &self.a(k * n - p)?;
        Ok(Self::equality_report("shifted-addition", vec![k, n, p], lhs, rhs))
    }

    /// A_{kn} = A_k o (A_n + 2).
    pub fn check_composition(&mut self, k: i64, n: i64) -> Result<VerificationReport, SequenceError> {
        if k < 1 || n < 1 {
            return Err(SequenceError::Range(format!(
                "composition needs k, n >= 1, got k={k}, n={n}"
            )));
        }
        let lhs = self.a(k * n)?;
        let inner = &self.a(n)? + &IntPoly::constant(2);
        let rhs = self.a(k)?.compose(&inner);
        Ok(Self::equality_report("composition", vec![k, n], lhs, rhs))
    }

    /// A_n = a A_{n-1} - A_{n-2} + 2 A_1 cross-checked against Eq.-(2) route.
    pub fn check_three_term(&mut self, n: i64) -> Result<VerificationReport, SequenceError> {
        if n < 1 {
            return Err(SequenceError::Range(format!("three-term needs n >= 1, got {n}")));
        }
        let lhs = self.a(n)?;
        let rhs = self.a_via_three_term(n)?;
        Ok(Self::equality_report("three-term", vec![n], lhs, rhs))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    L,
    A,
}

/// Coefficient table: row n holds the coefficients of L_n (rows 1..=max_n)
/// or A_n (rows 3..=max_n), ascending, zero-padded to width max_n + 1.
pub fn coefficient_table(
    cache: &mut SequenceCache,
    which: TableKind,
    max_n: i64,
) -> Result<Vec<(String, Vec<BigInt>)>, SequenceError> {
    let (start, name) = match which {
        TableKind::L => (1, "L"),
        TableKind::A => (3, "A"),
    };
    if max_n < start {
        return Err(SequenceError::Range(format!(
            "{name} table needs max_n >= {start}, got {max_n}"
        )));
    }
    let width = (max_n + 1) as usize;
    let mut rows = Vec::new();
    for n in start..=max_n {
        let poly = match which {
            TableKind::L => cache.l(n)?,
            TableKind::A => cache.a(n)?,
        };
        let mut cells = poly.coeffs().to_vec();
        cells.resize(width, BigInt::from(0));
        rows.push((format!("{name}_{n}"), cells));
    }
    Ok(rows)
}

/// The printed L table: rows L_1..L_9, coefficients of 1, a, ..., a^9.
pub const REFERENCE_L_TABLE: [[i64; 10]; 9] = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, -2, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, -3, 0, 1, 0, 0, 0, 0, 0],
    [0, 3, 0, -4, 0, 1, 0, 0, 0, 0],
    [-1, 0, 6, 0, -5, 0, 1, 0, 0, 0],
    [0, -4, 0, 10, 0, -6, 0, 1, 0, 0],
    [1, 0, -10, 0, 15, 0, -7, 0, 1, 0],
    [0, 5, 0, -20, 0, 21, 0, -8, 0, 1],
];

/// The printed A table: rows A_3..A_11, coefficients of 1, a, ..., a^11.
pub const REFERENCE_A_TABLE: [[i64; 12]; 9] = [
    [-2, -3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -4, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [-2, 5, 0, -5, 0, 1, 0, 0, 0, 0, 0, 0],
    [-4, 0, 9, 0, -6, 0, 1, 0, 0, 0, 0, 0],
    [-2, -7, 0, 14, 0, -7, 0, 1, 0, 0, 0, 0],
    [0, 0, -16, 0, 20, 0, -8, 0, 1, 0, 0, 0],
    [-2, 9, 0, -30, 0, 27, 0, -9, 0, 1, 0, 0],
    [-4, 0, 25, 0, -50, 0, 35, 0, -10, 0, 1, 0],
    [-2, -11, 0, 55, 0, -77, 0, 44, 0, -11, 0, 1],
];

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn l_base_cases_and_table_rows() {
        let mut c = SequenceCache::new();
        assert!(c.l(-1).unwrap().is_zero());
        assert_eq!(c.l(0).unwrap(), IntPoly::one());
        assert_eq!(c.l(1).unwrap(), IntPoly::var());
        assert_eq!(c.l(9).unwrap(), IntPoly::from_i64s(&[0, 5, 0, -20, 0, 21, 0, -8, 0, 1]));
        assert!(c.l(-2).is_err());
        for (i, row) in REFERENCE_L_TABLE.iter().enumerate() {
            assert_eq!(c.l(i as i64 + 1).unwrap(), IntPoly::from_i64s(row));
        }
    }

    #[test]
    fn a_examples_and_table_rows() {
        let mut c = SequenceCache::new();
        assert_eq!(c.a(1).unwrap(), IntPoly::from_i64s(&[-2, 1]));
        assert_eq!(c.a(4).unwrap(), IntPoly::from_i64s(&[0, 0, -4, 0, 1]));
        assert_eq!(
            c.a(11).unwrap(),
            IntPoly::from_i64s(&[-2, -11, 0, 55, 0, -77, 0, 44, 0, -11, 0, 1])
        );
        assert!(c.a(0).is_err());
        for (i, row) in REFERENCE_A_TABLE.iter().enumerate() {
            assert_eq!(c.a(i as i64 + 3).unwrap(), IntPoly::from_i64s(row));
        }
    }

    #[test]
    fn three_term_route_matches() {
        let mut c = SequenceCache::new();
        assert_eq!(c.a_via_three_term(1).unwrap(), IntPoly::from_i64s(&[-2, 1]));
        assert_eq!(c.a_via_three_term(3).unwrap(), IntPoly::from_i64s(&[-2, -3, 0, 1]));
        assert_eq!(
            c.a_via_three_term(10).unwrap(),
            IntPoly::from_i64s(&[-4, 0, 25, 0, -50, 0, 35, 0, -10, 0, 1])
        );
        for n in 1..=60 {
            assert!(c.check_three_term(n).unwrap().passed, "n={n}");
        }
    }

    #[test]
    fn a_equals_l_difference_form() {
        // A_n = L_n - L_{n-2} - 2
        let mut c = SequenceCache::new();
        for n in 1..=60 {
            let lhs = c.a(n).unwrap();
            let rhs = &(&c.l(n).unwrap() - &c.l(n - 2).unwrap()) - &IntPoly::constant(2);
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn monic_degree_and_parity() {
        let mut c = SequenceCache::new();
        for n in 0..=200i64 {
            let l = c.l(n).unwrap();
            assert_eq!(l.degree(), Some(n as usize));
            assert!(l.is_monic());
            for (i, coeff) in l.coeffs().iter().enumerate() {
                if (i as i64) % 2 != n % 2 {
                    assert!(coeff == &BigInt::from(0), "L_{n} coeff {i}");
                }
            }
        }
        for n in 1..=200i64 {
            let a = c.a(n).unwrap();
            assert_eq!(a.degree(), Some(n as usize));
            assert!(a.is_monic());
            assert!(a.eval_int(&BigInt::from(2)).is_zero(), "A_{n}(2)");
        }
    }

    #[test]
    fn value_at_zero_by_residue_class() {
        // The A table shows constant term -4 for n = 2 mod 4 (rows A_6, A_10)
        // and a double root at a = 0 for n = 0 mod 4.
        let mut c = SequenceCache::new();
        for k in 1..=25i64 {
            let v = c.a(4 * k - 2).unwrap().eval_int(&BigInt::from(0));
            assert_eq!(v, BigInt::from(-4), "A_{}(0)", 4 * k - 2);
            let a4k = c.a(4 * k).unwrap();
            assert!(a4k.eval_int(&BigInt::from(0)).is_zero());
            let dec = crate::polyalg::squarefree_decomposition(&a4k).unwrap();
            let mult = dec
                .factors
                .iter()
                .find(|(f, _)| f == &IntPoly::var())
                .map(|(_, m)| *m)
                .unwrap_or_else(|| {
                    dec.factors
                        .iter()
                        .find(|(f, _)| f.eval_int(&BigInt::from(0)).is_zero())
                        .map(|(_, m)| *m)
                        .unwrap_or(0)
                });
            assert_eq!(mult, 2, "a-multiplicity in A_{}", 4 * k);
        }
    }

    #[test]
    fn checker_examples() {
        let mut c = SequenceCache::new();
        assert!(c.check_l_product(5, 2).unwrap().passed);
        assert!(c.check_l_product(7, 7).unwrap().passed); // boundary k = n
        assert!(c.check_l_product(3, 4).is_err());
        assert!(c.check_l_square(3).unwrap().passed);
        assert!(c.check_l_square(2).unwrap().passed);
        assert!(c.check_l_square(1).is_err());
        assert!(c.check_doubling(2).unwrap().passed);
        assert!(c.check_doubling(3).unwrap().passed);
        assert!(c.check_doubling(0).is_err());
        assert!(c.check_divisibility(3, 2).unwrap().passed);
        assert!(c.check_divisibility(5, 1).unwrap().passed);
        assert!(c.check_addition(3, 2).unwrap().passed);
        assert!(c.check_addition(2, 1).unwrap().passed);
        assert!(c.check_addition(2, 2).is_err());
        assert!(c.check_shifted_addition(2, 3, 1).unwrap().passed);
        assert!(c.check_shifted_addition(1, 3, 2).unwrap().passed);
        assert!(c.check_shifted_addition(1, 1, 1).is_err());
        assert!(c.check_composition(1, 5).unwrap().passed);
        assert!(c.check_composition(2, 3).unwrap().passed);
        assert!(c.check_composition(0, 1).is_err());
    }

    #[test]
    fn counterexample_on_forced_failure() {
        // A deliberately wrong comparison must surface a counterexample.
        let r = SequenceCache::equality_report(
            "bogus",
            vec![1],
            IntPoly::var(),
            IntPoly::one(),
        );
        assert!(!r.passed);
        let ce = r.counterexample.unwrap();
        assert_eq!(ce.lhs, "a");
        assert_eq!(ce.rhs, "1");
    }

    #[test]
    fn table_shapes() {
        let mut c = SequenceCache::new();
        let rows = coefficient_table(&mut c, TableKind::L, 1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].0, "L_1");
        assert_eq!(rows[0].1, vec![BigInt::from(0), BigInt::from(1)]);
        let rows = coefficient_table(&mut c, TableKind::A, 11).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows[8].1.len(), 12);
        assert!(coefficient_table(&mut c, TableKind::L, 0).is_err());
        assert!(coefficient_table(&mut c, TableKind::A, 2).is_err());
    }
}
