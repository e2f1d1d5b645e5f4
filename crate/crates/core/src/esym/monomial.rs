use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ESym, Partition};
use crate::error::{Error, Result};
use crate::qalg::{QPoly, QRat};

/// Sum `sum c_mu m_mu` in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialExpansion {
    pub terms: BTreeMap<Partition, QPoly>,
}

impl MonomialExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, p: Partition, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert_with(QPoly::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> QPoly {
        self.terms.get(p).cloned().unwrap_or_default()
    }
}

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`.
struct ZeroOneCounter {
    rows: Vec<usize>,
    memo: HashMap<(usize, Vec<usize>), BigInt>,
}

impl ZeroOneCounter {
    fn count(&mut self, row: usize, caps: Vec<usize>) -> BigInt {
        if row == self.rows.len() {
            return if caps.iter().all(|&c| c == 0) {
                BigInt::from(1)
            } else {
                BigInt::zero()
            };
        }
        let remaining: usize = self.rows[row..].iter().sum();
        if remaining != caps.iter().sum::<usize>() {
            return BigInt::zero();
        }
        let key = (row, caps.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let need = self.rows[row];
        let positive: Vec<usize> = (0..caps.len()).filter(|&c| caps[c] > 0).collect();
        let mut chosen = Vec::with_capacity(need);
        self.choose(row, &caps, &positive, 0, need, &mut chosen, &mut total);
        self.memo.insert(key, total.clone());
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        row: usize,
        caps: &[usize],
        positive: &[usize],
        start: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        total: &mut BigInt,
    ) {
        if need == 0 {
            let mut next = caps.to_vec();
            for &c in chosen.iter() {
                next[c] -= 1;
            }
            next.sort_unstable_by(|a, b| b.cmp(a));
            while next.last() == Some(&0) {
                next.pop();
            }
            *total += self.count(row + 1, next);
            return;
        }
        if positive.len() - start < need {
            return;
        }
        for idx in start..positive.len() {
            chosen.push(positive[idx]);
            self.choose(row, caps, positive, idx + 1, need - 1, chosen, total);
            chosen.pop();
        }
    }
}

/// Coefficient of `m_mu` in `e_lambda`.
fn transition(lambda: &Partition, mu: &Partition) -> BigInt {
    let mut counter = ZeroOneCounter {
        rows: lambda.parts().to_vec(),
        memo: HashMap::new(),
    };
    counter.count(0, mu.parts().to_vec())
}

/// Monomial expansion of `e_lambda` in `nvars` variables.
pub fn e_in_monomial(lambda: &Partition, nvars: usize) -> MonomialExpansion {
    let mut out = MonomialExpansion::zero();
    for mu in Partition::all(lambda.size()) {
        if mu.len() > nvars {
            continue;
        }
        let c = transition(lambda, &mu);
        out.add_term(mu, &QPoly::constant(c));
    }
    out
}

/// Rewrites a homogeneous monomial expansion in the elementary basis.
///
/// `e_{mu'}` is `m_mu` plus terms lexicographically below `mu`, so the
/// largest remaining `m_mu` determines the next `e` coefficient.
pub fn monomial_to_e(m: &MonomialExpansion) -> Result<ESym> {
    let mut rest = m.clone();
    let mut out = ESym::zero();
    let degree = match m.terms.keys().next() {
        None => return Ok(out),
        Some(p) => p.size(),
    };
    if m.terms.keys().any(|p| p.size() != degree) {
        return Err(Error::Inconsistent("mixed degrees".into()));
    }
    let mut cache: HashMap<Partition, MonomialExpansion> = HashMap::new();
    while let Some((mu, c)) = rest.terms.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) {
        let lambda = mu.conjugate();
        let e = cache
            .entry(lambda.clone())
            .or_insert_with(|| e_in_monomial(&lambda, degree));
        if e.coeff(&mu) != QPoly::one() {
            return Err(Error::Inconsistent(format!(
                "leading monomial of e{} is not m{}",
                lambda.label(),
                mu.label()
            )));
        }
        for (nu, t) in &e.terms {
            rest.add_term(nu.clone(), &(-(&c * t)));
        }
        if rest.terms.contains_key(&mu) {
            return Err(Error::Inconsistent(format!("m{} did not cancel", mu.label())));
        }
        out.add_term(lambda, &QRat::from_poly(c));
    }
    Ok(out)
}
