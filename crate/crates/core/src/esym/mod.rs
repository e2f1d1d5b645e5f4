//! Symmetric functions in the elementary basis.

mod monomial;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::qalg::{factor_as_qbrackets, pretty_rat, QPoly, QRat};

pub use monomial::{e_in_monomial, monomial_to_e, MonomialExpansion};

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn single(k: usize) -> Self {
        Self::new([k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(&other.0).copied())
    }

    /// Removes one instance of `part`, if present.
    pub fn remove_part(&self, part: usize) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count())
                .collect(),
        )
    }

    /// All partitions of `n`, lexicographically ascending.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.reverse();
        out
    }

    /// Compact label such as `32` or `(10,2)` when a part exceeds 9.
    pub fn label(&self) -> String {
        if self.0.iter().all(|&p| p < 10) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
            format!("({})", inner.join(","))
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&[usize]> for Partition {
    fn from(p: &[usize]) -> Self {
        Partition::new(p.iter().copied())
    }
}

/// All compositions of `n` (strict parts), in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Finite sum `sum c_lambda e_lambda` with rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ESym {
    terms: BTreeMap<Partition, QRat>,
}

/// Evaluation mode for [`ESym::is_e_positive`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PositivityMode {
    AtQ1,
    Coefficientwise,
}

/// Outcome of a positivity check; `witness` names the first failing term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub positive: bool,
    pub witness: Option<(Partition, QRat)>,
}

impl ESym {
    pub fn zero() -> Self {
        ESym::default()
    }

    pub fn one() -> Self {
        Self::term(Partition::empty(), QRat::one())
    }

    pub fn term(p: Partition, c: QRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(p, c);
        }
        ESym { terms }
    }

    /// `c * e_k`.
    pub fn e(k: usize, c: QRat) -> Self {
        Self::term(Partition::single(k), c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, QRat)>) -> Self {
        let mut out = ESym::zero();
        for (p, c) in terms {
            out.add_term(p, &c);
        }
        out
    }

    pub fn constant(c: QRat) -> Self {
        Self::term(Partition::empty(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Partition) -> QRat {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, p: Partition, c: &QRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(old) => {
                let s = &*old + c;
                if s.is_zero() {
                    self.terms.remove(&p);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &ESym) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c);
        }
    }

    pub fn scale(&self, c: &QRat) -> ESym {
        if c.is_zero() {
            return ESym::zero();
        }
        ESym {
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn scale_poly(&self, c: &QPoly) -> ESym {
        if c.is_zero() {
            return ESym::zero();
        }
        ESym {
            terms: self
                .terms
                .iter()
                .map(|(p, x)| (p.clone(), x.mul_poly(c)))
                .collect(),
        }
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_poly(&self, d: &QPoly) -> Result<ESym> {
        let mut terms = BTreeMap::new();
        for (p, x) in &self.terms {
            terms.insert(p.clone(), x.div_poly(d)?);
        }
        Ok(ESym { terms })
    }

    /// Multiply every partition by `e_k` (concatenate and sort).
    pub fn mul_e(&self, k: usize) -> ESym {
        ESym {
            terms: self
                .terms
                .iter()
                .map(|(p, x)| (p.union(&Partition::single(k)), x.clone()))
                .collect(),
        }
    }

    /// Degree, if all terms share one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::size);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.values().all(QRat::is_polynomial)
    }

    /// First coefficient that is not a polynomial in `q`.
    pub fn check_polynomial(&self) -> Result<()> {
        for (p, c) in &self.terms {
            if !c.is_polynomial() {
                return Err(Error::NonPolynomial {
                    partition: p.label(),
                    value: c.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Substitute `q = 1`.
    pub fn eval_q1(&self) -> Result<ESym> {
        let mut out = ESym::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &QRat::from_rational(&c.eval_q1()?));
        }
        Ok(out)
    }

    pub fn is_e_positive(&self, mode: PositivityMode) -> Result<Positivity> {
        for (p, c) in &self.terms {
            let ok = match mode {
                PositivityMode::AtQ1 => !c.eval_q1()?.is_negative(),
                PositivityMode::Coefficientwise => {
                    let poly = c.as_poly().ok_or_else(|| Error::NonPolynomial {
                        partition: p.label(),
                        value: c.to_string(),
                    })?;
                    poly.all_nonnegative()
                }
            };
            if !ok {
                return Ok(Positivity {
                    positive: false,
                    witness: Some((p.clone(), c.clone())),
                });
            }
        }
        Ok(Positivity {
            positive: true,
            witness: None,
        })
    }

    /// Build from integer coefficients, e.g. `[(&[3, 1], 2), (&[4], 16)]`.
    pub fn from_ints(terms: &[(&[usize], i64)]) -> ESym {
        ESym::from_terms(
            terms
                .iter()
                .map(|(p, c)| (Partition::from(*p), QRat::from_int(*c))),
        )
    }

    /// Build from polynomial coefficients given as ascending integer lists.
    pub fn from_polys(terms: &[(&[usize], QPoly)]) -> ESym {
        ESym::from_terms(
            terms
                .iter()
                .map(|(p, c)| (Partition::from(*p), QRat::from_poly(c.clone()))),
        )
    }
}

impl fmt::Debug for ESym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ESym({})", self)
    }
}

fn coeff_text(c: &QRat) -> (bool, String) {
    if let Some(p) = c.as_poly() {
        if p.is_constant() {
            let v = p.coeff(0);
            return (v.is_negative(), v.abs().to_string());
        }
        if let Some(mut b) = factor_as_qbrackets(p) {
            let neg = b.scalar.is_negative();
            b.scalar = b.scalar.abs();
            return (neg, b.to_string());
        }
        let s = p.to_string();
        return (false, format!("({})", s));
    }
    (false, format!("({})", pretty_rat(c)))
}

impl fmt::Display for ESym {
    /// Paper-style text, e.g. `q^2[2]_q[2]_q·e32 + 4e5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (p, c)) in self.terms.iter().enumerate() {
            let (neg, text) = coeff_text(c);
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_int = c.as_poly().is_some_and(QPoly::is_constant);
            if p.is_empty() {
                write!(f, "{}", text)?;
            } else if is_int {
                if text == "1" {
                    write!(f, "e{}", p.label())?;
                } else {
                    write!(f, "{}e{}", text, p.label())?;
                }
            } else {
                write!(f, "{}·e{}", text, p.label())?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a ESym> for &'a ESym {
    type Output = ESym;
    fn add(self, rhs: &ESym) -> ESym {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<'a> Sub<&'a ESym> for &'a ESym {
    type Output = ESym;
    fn sub(self, rhs: &ESym) -> ESym {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), &(-c));
        }
        out
    }
}

impl Neg for &ESym {
    type Output = ESym;
    fn neg(self) -> ESym {
        ESym {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a ESym> for &'a ESym {
    type Output = ESym;
    fn mul(self, rhs: &ESym) -> ESym {
        let mut out = ESym::zero();
        for (p, a) in &self.terms {
            for (r, b) in &rhs.terms {
                out.add_term(p.union(r), &(a * b));
            }
        }
        out
    }
}

impl Add for ESym {
    type Output = ESym;
    fn add(self, rhs: ESym) -> ESym {
        &self + &rhs
    }
}

impl Mul for ESym {
    type Output = ESym;
    fn mul(self, rhs: ESym) -> ESym {
        &self * &rhs
    }
}

/// Shorthand used throughout the tests: `c * e_lambda` with integer `c`.
pub fn eint(parts: &[usize], c: i64) -> ESym {
    ESym::term(Partition::from(parts), QRat::from_int(BigInt::from(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::q_integer;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn partitions_of_five_in_order() {
        let labels: Vec<String> = Partition::all(5).iter().map(Partition::label).collect();
        assert_eq!(labels, ["11111", "2111", "221", "311", "32", "41", "5"]);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::from(&[3, 1][..]).conjugate(), Partition::from(&[2, 1, 1][..]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn products_concatenate() {
        assert_eq!(&eint(&[3], 1) * &eint(&[2], 1), eint(&[3, 2], 1));
        let x = ESym::e(3, QRat::from_poly(&QPoly::monomial(1, 2) * &q_integer(2)));
        assert_eq!(&x * &ESym::one(), x);
        let a = &eint(&[3, 1], 1) + &eint(&[4], 4);
        assert_eq!(
            &a * &eint(&[3], 2),
            &eint(&[3, 3, 1], 2) + &eint(&[4, 3], 8)
        );
    }

    #[test]
    fn sums_cancel() {
        assert!((&eint(&[3], 1) + &eint(&[3], -1)).is_zero());
        let a = ESym::term(Partition::from(&[2, 1][..]), QRat::from_poly(QPoly::q()));
        let b = ESym::term(Partition::from(&[2, 1][..]), QRat::from_poly(QPoly::monomial(1, 2)));
        assert_eq!(
            &a + &b,
            ESym::term(Partition::from(&[2, 1][..]), QRat::from_poly(poly(&[0, 1, 1])))
        );
        let c = &(&eint(&[2, 2, 2], 2) - &eint(&[3, 3], 6)) + &eint(&[3, 3], 6);
        assert_eq!(c, eint(&[2, 2, 2], 2));
    }

    #[test]
    fn positivity_witness() {
        let x = ESym::from_ints(&[
            (&[2, 2, 2], 2),
            (&[3, 3], -6),
            (&[4, 2], 26),
            (&[5, 1], 28),
            (&[6], 102),
        ]);
        let v = x.is_e_positive(PositivityMode::AtQ1).unwrap();
        assert!(!v.positive);
        assert_eq!(v.witness, Some((Partition::from(&[3, 3][..]), QRat::from_int(-6))));
        assert!(ESym::zero().is_e_positive(PositivityMode::Coefficientwise).unwrap().positive);
    }

    #[test]
    fn coefficientwise_rejects_rational() {
        let x = ESym::e(2, QRat::reduce(QPoly::one(), q_integer(2)).unwrap());
        assert!(x.is_e_positive(PositivityMode::Coefficientwise).is_err());
        assert!(x.is_e_positive(PositivityMode::AtQ1).unwrap().positive);
    }

    #[test]
    fn display_uses_brackets() {
        let x = &ESym::e(4, QRat::from_poly(&QPoly::q() * &q_integer(3)))
            + &ESym::term(
                Partition::from(&[2, 2][..]),
                QRat::from_poly(QPoly::monomial(1, 2)),
            );
        assert_eq!(x.to_string(), "q^2·e22 + q[3]_q·e4");
        assert_eq!(ESym::from_ints(&[(&[3, 1], 2), (&[4], 16)]).to_string(), "2e31 + 16e4");
        assert_eq!(ESym::from_ints(&[(&[], 4)]).to_string(), "4");
        assert_eq!(ESym::from_ints(&[(&[3, 3], -6), (&[2], 1)]).to_string(), "e2 - 6e33");
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn esym() -> impl Strategy<Value = ESym> {
        prop::collection::vec(
            (prop::collection::vec(1usize..4, 0..3), -3i64..=3, 0usize..3),
            0..4,
        )
        .prop_map(|ts| {
            ESym::from_terms(ts.into_iter().map(|(p, c, k)| {
                (Partition::new(p), QRat::from_poly(QPoly::monomial(c, k)))
            }))
        })
    }

    proptest! {
        #[test]
        fn product_is_commutative_and_associative(a in esym(), b in esym(), c in esym()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn degree_is_additive(a in esym(), b in esym()) {
            if let (Some(da), Some(db)) = (a.homogeneous_degree(), b.homogeneous_degree()) {
                let p = &a * &b;
                if !p.is_zero() {
                    prop_assert_eq!(p.homogeneous_degree(), Some(da + db));
                }
            }
        }

        #[test]
        fn coefficientwise_implies_at_q1(a in esym()) {
            let strict = a.is_e_positive(PositivityMode::Coefficientwise).unwrap().positive;
            let weak = a.is_e_positive(PositivityMode::AtQ1).unwrap().positive;
            prop_assert!(!strict || weak);
        }
    }
}
