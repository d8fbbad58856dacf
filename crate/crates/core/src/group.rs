use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An element of a finite abelian grading group, as a tuple of residues.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(pub Vec<u32>);

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "(")?;
            for (i, x) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")
        }
    }
}

/// `Z_{k_1} x ... x Z_{k_t}` in additive notation; the identity is the all-zero tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingGroup {
    orders: Vec<u32>,
}

impl GradingGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::InvalidGroup);
        }
        Ok(GradingGroup { orders })
    }

    /// `Z_k`.
    pub fn cyclic(k: u32) -> Self {
        Self::new(alloc::vec![k]).expect("cyclic order >= 1")
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn size(&self) -> u64 {
        self.orders.iter().map(|&k| k as u64).product()
    }

    pub fn identity(&self) -> Degree {
        Degree(alloc::vec![0; self.orders.len()])
    }

    /// Reduces raw integers into the canonical residue tuple.
    pub fn degree(&self, raw: &[i64]) -> Result<Degree> {
        if raw.len() != self.orders.len() {
            return Err(Error::InvalidDegree(alloc::format!("{raw:?}")));
        }
        Ok(Degree(raw.iter().zip(&self.orders).map(|(&x, &k)| x.rem_euclid(k as i64) as u32).collect()))
    }

    pub fn contains(&self, d: &Degree) -> bool {
        d.0.len() == self.orders.len() && d.0.iter().zip(&self.orders).all(|(x, k)| x < k)
    }

    pub fn add(&self, a: &Degree, b: &Degree) -> Degree {
        Degree(a.0.iter().zip(&b.0).zip(&self.orders).map(|((x, y), k)| (x + y) % k).collect())
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<Degree> {
        let mut out = alloc::vec![self.identity()];
        for (pos, &k) in self.orders.iter().enumerate() {
            let base = core::mem::take(&mut out);
            for d in base {
                for x in 0..k {
                    let mut e = d.clone();
                    e.0[pos] = x;
                    out.push(e);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for GradingGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.orders.iter().map(|k| alloc::format!("Z{k}")).collect();
        f.write_str(&parts.join(" x "))
    }
}
