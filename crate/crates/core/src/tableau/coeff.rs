//! Products `q^a prod [k]_q^(m_k)` with integer exponents, the shape of every
//! tableau coefficient.

use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::qalg::{QPoly, QRat};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BracketMonomial {
    qpow: usize,
    /// `exps[k]` is the exponent of `[k]_q`; indices 0 and 1 stay zero.
    exps: Vec<i32>,
}

impl BracketMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn qpow(&self) -> usize {
        self.qpow
    }

    /// Exponent of `[k]_q`.
    pub fn exponent(&self, k: usize) -> i32 {
        self.exps.get(k).copied().unwrap_or(0)
    }

    pub fn mul_q(&mut self, a: usize) {
        self.qpow += a;
    }

    /// Multiply by `[k]_q^e`; `[1]_q = 1` is ignored. `k = 0` is a caller bug.
    pub fn mul_bracket(&mut self, k: usize, e: i32) {
        assert!(k > 0, "[0]_q in a tableau coefficient");
        if k == 1 || e == 0 {
            return;
        }
        if self.exps.len() <= k {
            self.exps.resize(k + 1, 0);
        }
        self.exps[k] += e;
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    pub fn mul(&self, other: &BracketMonomial) -> BracketMonomial {
        let mut out = self.clone();
        out.qpow += other.qpow;
        for (k, &e) in other.exps.iter().enumerate() {
            if e != 0 {
                out.mul_bracket(k, e);
            }
        }
        out
    }

    /// True when no bracket has a negative exponent. A product can still
    /// be a polynomial otherwise (`[4]/[2]`); see [`BracketMonomial::to_qrat`].
    pub fn is_manifestly_polynomial(&self) -> bool {
        self.exps.iter().all(|&e| e >= 0)
    }

    fn part(&self, sign: i32) -> QPoly {
        let mut p = QPoly::one();
        for (k, &e) in self.exps.iter().enumerate() {
            for _ in 0..(e * sign).max(0) {
                p = &p * &QPoly::q_integer(k);
            }
        }
        p
    }

    pub fn numerator(&self) -> QPoly {
        self.part(1).shift(self.qpow)
    }

    pub fn denominator(&self) -> QPoly {
        self.part(-1)
    }

    pub fn to_qrat(&self) -> QRat {
        QRat::reduce(self.numerator(), self.denominator()).expect("bracket denominators are nonzero")
    }
}

impl fmt::Debug for BracketMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BracketMonomial {
    /// `q^2[4]_q[2]_q^2/[3]_q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        match self.qpow {
            0 => {}
            1 => num.push('q'),
            a => num.push_str(&format!("q^{a}")),
        }
        let mut den = String::new();
        for (k, &e) in self.exps.iter().enumerate().rev() {
            if e == 0 {
                continue;
            }
            let s = if e.abs() == 1 {
                format!("[{k}]_q")
            } else {
                format!("[{k}]_q^{}", e.abs())
            };
            if e > 0 {
                num.push_str(&s);
            } else {
                den.push_str(&s);
            }
        }
        if num.is_empty() {
            num.push('1');
        }
        if den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

/// Exact sum of weighted monomials over the least common bracket
/// denominator.
pub fn sum_monomials<'a>(terms: impl IntoIterator<Item = (&'a BracketMonomial, i64)>) -> Result<QRat> {
    let terms: Vec<(&BracketMonomial, i64)> = terms.into_iter().filter(|t| t.1 != 0).collect();
    let mut common: HashMap<usize, i32> = HashMap::new();
    for (m, _) in &terms {
        for (k, &e) in m.exps.iter().enumerate() {
            if e < 0 {
                let c = common.entry(k).or_insert(0);
                *c = (*c).max(-e);
            }
        }
    }
    let mut lift = BracketMonomial::one();
    for (&k, &e) in &common {
        lift.mul_bracket(k, e);
    }
    let mut num = QPoly::zero();
    for (m, c) in terms {
        let lifted = m.mul(&lift);
        debug_assert!(lifted.is_manifestly_polynomial());
        num += &lifted.numerator().scale(&c.into());
    }
    QRat::reduce(num, lift.numerator())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_cancel_and_print() {
        let mut m = BracketMonomial::one();
        m.mul_q(2);
        m.mul_bracket(4, 1);
        m.mul_bracket(3, -1);
        m.mul_bracket(3, 1);
        m.mul_bracket(2, 2);
        assert_eq!(m.to_string(), "q^2[4]_q[2]_q^2");
        m.mul_bracket(5, -1);
        assert_eq!(m.to_string(), "q^2[4]_q[2]_q^2/[5]_q");
        assert_eq!(BracketMonomial::one().to_string(), "1");
    }

    #[test]
    fn sums_over_common_denominator() {
        let mut a = BracketMonomial::one();
        a.mul_q(1);
        a.mul_bracket(2, 1);
        a.mul_bracket(3, -1);
        let mut b = BracketMonomial::one();
        b.mul_bracket(3, -1);
        let s = sum_monomials([(&a, 1), (&b, 1)]).unwrap();
        assert!(s.is_one());
        let half = sum_monomials([(&b, 3)]).unwrap();
        assert_eq!(half, QRat::reduce(QPoly::constant(3), QPoly::q_integer(3)).unwrap());
        assert!(sum_monomials(std::iter::empty()).unwrap().is_zero());
    }
}
