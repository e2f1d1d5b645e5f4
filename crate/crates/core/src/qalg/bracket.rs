use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::QPoly;
use super::rat::QRat;

/// Product form `scalar * q^qpow * [k_1]_q [k_2]_q ...` used for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketForm {
    pub scalar: BigInt,
    pub qpow: usize,
    /// Bracket arguments, each at least 2, in descending order.
    pub brackets: Vec<usize>,
}

impl BracketForm {
    pub fn to_poly(&self) -> QPoly {
        let mut p = QPoly::monomial(self.scalar.clone(), self.qpow);
        for &k in &self.brackets {
            p = &p * &QPoly::q_integer(k);
        }
        p
    }
}

/// Greedy trial division by `[k]_q`, `k` descending. Returns a product form
/// only when the residual is a monomial `c q^a`.
pub fn factor_as_qbrackets(p: &QPoly) -> Option<BracketForm> {
    if p.is_zero() {
        return None;
    }
    let mut rest = p.clone();
    let mut brackets = Vec::new();
    let mut k = rest.degree().unwrap() + 1;
    while k >= 2 {
        match rest.div_exact(&QPoly::q_integer(k)) {
            Some(quo) => {
                brackets.push(k);
                rest = quo;
                k = k.min(rest.degree().unwrap() + 1);
            }
            None => k -= 1,
        }
    }
    let low = rest.low_degree().unwrap();
    if rest.degree().unwrap() != low {
        return None;
    }
    Some(BracketForm {
        scalar: rest.coeff(low),
        qpow: low,
        brackets,
    })
}

impl fmt::Display for BracketForm {
    /// Paper style, e.g. `2q^2[5]_q[2]_q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mag = self.scalar.abs();
        if self.scalar.is_negative() {
            write!(f, "-")?;
        }
        let bare = self.qpow == 0 && self.brackets.is_empty();
        if !mag.is_one() || bare {
            write!(f, "{}", mag)?;
        }
        match self.qpow {
            0 => {}
            1 => write!(f, "q")?,
            a => write!(f, "q^{}", a)?,
        }
        for k in &self.brackets {
            write!(f, "[{}]_q", k)?;
        }
        Ok(())
    }
}

/// Paper-style text for a coefficient: bracket form when available, raw
/// ascending coefficients otherwise.
pub fn pretty_poly(p: &QPoly) -> String {
    match factor_as_qbrackets(p) {
        Some(b) => b.to_string(),
        None => p.to_string(),
    }
}

pub fn pretty_rat(r: &QRat) -> String {
    if r.is_polynomial() {
        return pretty_poly(r.numer());
    }
    format!("{}/({})", wrap(&pretty_poly(r.numer())), pretty_poly(r.denom()))
}

fn wrap(s: &str) -> String {
    if s[1..].contains(['+', '-']) {
        format!("({})", s)
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_e41_coefficient() {
        let p = QPoly::from_i64s(&[0, 1, 3, 4, 3, 1]);
        let f = factor_as_qbrackets(&p).unwrap();
        assert_eq!(f.qpow, 1);
        assert_eq!(f.brackets, vec![3, 2, 2]);
        assert_eq!(f.to_string(), "q[3]_q[2]_q[2]_q");
        assert_eq!(f.to_poly(), p);
    }

    #[test]
    fn single_bracket() {
        let f = factor_as_qbrackets(&QPoly::from_i64s(&[1, 1])).unwrap();
        assert_eq!(f.to_string(), "[2]_q");
    }

    #[test]
    fn non_bracket_product() {
        assert_eq!(factor_as_qbrackets(&QPoly::from_i64s(&[1, 1, 0, 1])), None);
    }

    #[test]
    fn scalars_and_monomials() {
        assert_eq!(factor_as_qbrackets(&QPoly::constant(4)).unwrap().to_string(), "4");
        assert_eq!(
            factor_as_qbrackets(&QPoly::monomial(-3, 2)).unwrap().to_string(),
            "-3q^2"
        );
        let p = &QPoly::monomial(2, 2) * &(&QPoly::q_integer(5) * &QPoly::q_integer(2));
        assert_eq!(pretty_poly(&p), "2q^2[5]_q[2]_q");
    }

    #[test]
    fn rational_display() {
        let r = QRat::reduce(&QPoly::q() * &QPoly::q_integer(2), QPoly::q_integer(3)).unwrap();
        assert_eq!(pretty_rat(&r), "q[2]_q/([3]_q)");
    }
}
