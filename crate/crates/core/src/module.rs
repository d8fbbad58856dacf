//! Graded modules `M = ⊕ M_g` presented as direct sums of cyclic factors, each
//! tagged with a degree.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{divides, lcm};
use crate::error::{Error, Result};
use crate::group::{Degree, GradingGroup};
use crate::ring::BaseRing;

/// One cyclic summand: `Z` when `order == 0`, `Z_order` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub order: i64,
    pub degree: Degree,
}

/// The factors of a single degree `g`, i.e. the component `M_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub degree: Degree,
    /// Positions of this block's factors in the module's factor list.
    pub indices: Vec<usize>,
    pub orders: Vec<i64>,
}

impl Block {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|&n| n != 0)
    }

    pub fn cardinality(&self) -> Option<u128> {
        self.is_finite().then(|| self.orders.iter().map(|&n| n as u128).product())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedModule {
    ring: BaseRing,
    group: GradingGroup,
    factors: Vec<Factor>,
    /// Non-empty degree components, sorted by degree.
    blocks: Vec<Block>,
}

impl GradedModule {
    pub fn new(ring: BaseRing, group: GradingGroup, factors: Vec<Factor>) -> Result<Self> {
        for f in &factors {
            if f.order < 0 || f.order == 1 {
                return Err(Error::InvalidFactorOrder(f.order));
            }
            if !group.contains(&f.degree) {
                return Err(Error::InvalidDegree(alloc::format!("{}", f.degree)));
            }
            if ring.is_finite() && (f.order == 0 || !divides(f.order, ring.modulus())) {
                return Err(Error::FactorOrder { order: f.order, modulus: ring.modulus() });
            }
        }
        let mut degrees: Vec<Degree> = factors.iter().map(|f| f.degree.clone()).collect();
        degrees.sort();
        degrees.dedup();
        let blocks = degrees
            .into_iter()
            .map(|degree| {
                let indices: Vec<usize> =
                    factors.iter().enumerate().filter(|(_, f)| f.degree == degree).map(|(i, _)| i).collect();
                let orders = indices.iter().map(|&i| factors[i].order).collect();
                Block { degree, indices, orders }
            })
            .collect();
        Ok(GradedModule { ring, group, factors, blocks })
    }

    /// Convenience constructor from `(order, degree tuple)` pairs.
    pub fn from_spec(ring: BaseRing, group: GradingGroup, factors: &[(i64, &[i64])]) -> Result<Self> {
        let factors = factors
            .iter()
            .map(|&(order, deg)| Ok(Factor { order, degree: group.degree(deg)? }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, group, factors)
    }

    pub fn ring(&self) -> BaseRing {
        self.ring
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_of(&self, g: &Degree) -> Option<usize> {
        self.blocks.iter().position(|b| &b.degree == g)
    }

    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|f| f.order != 0)
    }

    pub fn cardinality(&self) -> Option<u128> {
        self.is_finite().then(|| self.factors.iter().map(|f| f.order as u128).product())
    }

    pub fn has_free_factor(&self) -> bool {
        !self.is_finite()
    }

    /// lcm of the torsion factor orders (1 for a module without torsion factors).
    pub fn torsion_exponent(&self) -> i64 {
        self.factors.iter().filter(|f| f.order != 0).fold(1, |acc, f| lcm(acc, f.order))
    }

    pub fn element(&self, coords: Vec<i64>) -> Result<ModuleElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::Arity { expected: self.factors.len(), got: coords.len() });
        }
        let coords =
            coords.into_iter().zip(&self.factors).map(|(x, f)| if f.order == 0 { x } else { x.rem_euclid(f.order) }).collect();
        Ok(ModuleElement { coords })
    }

    pub fn zero_element(&self) -> ModuleElement {
        ModuleElement { coords: alloc::vec![0; self.factors.len()] }
    }

    /// `r·m`.
    pub fn scale(&self, r: i64, m: &ModuleElement) -> ModuleElement {
        self.element(m.coords.iter().map(|x| x * r).collect()).expect("same arity")
    }

    /// The degree-`g` component of `m`.
    pub fn component(&self, m: &ModuleElement, g: &Degree) -> ModuleElement {
        let coords = m.coords.iter().zip(&self.factors).map(|(&x, f)| if &f.degree == g { x } else { 0 }).collect();
        ModuleElement { coords }
    }

    /// Nonzero homogeneous components, in degree order.
    pub fn homogeneous_components(&self, m: &ModuleElement) -> Vec<(Degree, ModuleElement)> {
        self.blocks
            .iter()
            .map(|b| (b.degree.clone(), self.component(m, &b.degree)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn is_homogeneous(&self, m: &ModuleElement) -> bool {
        self.homogeneous_components(m).len() <= 1
    }

    /// Every element of the degree-`g` component (finite blocks only).
    pub fn block_elements(&self, b: usize) -> Option<Vec<Vec<i64>>> {
        let block = &self.blocks[b];
        block.is_finite().then(|| box_points(&block.orders))
    }
}

/// All vectors of `∏ [0, n_i)`, lexicographic.
pub(crate) fn box_points(orders: &[i64]) -> Vec<Vec<i64>> {
    let mut out = alloc::vec![Vec::new()];
    for &n in orders {
        let base = core::mem::take(&mut out);
        for v in base {
            for x in 0..n {
                let mut w = v.clone();
                w.push(x);
                out.push(w);
            }
        }
    }
    out
}

impl fmt::Display for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            match fac.order {
                0 => write!(f, "Z@{}", fac.degree)?,
                n => write!(f, "Z{n}@{}", fac.degree)?,
            }
        }
        Ok(())
    }
}

/// Coordinates w.r.t. the factor list, reduced into `[0, order)` on torsion factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleElement {
    coords: Vec<i64>,
}

impl ModuleElement {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zxz() -> GradedModule {
        GradedModule::from_spec(BaseRing::Z, GradingGroup::cyclic(2), &[(0, &[0]), (0, &[1])]).unwrap()
    }

    #[test]
    fn homogeneous_decomposition() {
        let m = zxz();
        let x = m.element(alloc::vec![1, 1]).unwrap();
        let comps = m.homogeneous_components(&x);
        assert_eq!(comps.len(), 2);
        assert!(!m.is_homogeneous(&x));
        assert!(m.is_homogeneous(&m.element(alloc::vec![0, 5]).unwrap()));
        assert!(m.element(alloc::vec![1]).is_err());
    }

    #[test]
    fn factor_orders_must_divide_modulus() {
        let err = GradedModule::from_spec(BaseRing::zn(6), GradingGroup::cyclic(2), &[(4, &[0])]).unwrap_err();
        assert_eq!(err, Error::FactorOrder { order: 4, modulus: 6 });
        assert!(GradedModule::from_spec(BaseRing::zn(6), GradingGroup::cyclic(2), &[(0, &[0])]).is_err());
    }

    #[test]
    fn blocks_group_by_degree() {
        let m = GradedModule::from_spec(BaseRing::Z, GradingGroup::cyclic(2), &[(4, &[1]), (0, &[0]), (2, &[1])]).unwrap();
        assert_eq!(m.blocks().len(), 2);
        assert_eq!(m.blocks()[1].indices, [0, 2]);
        assert_eq!(m.torsion_exponent(), 4);
        let z8 = GradedModule::from_spec(BaseRing::zn(8), GradingGroup::cyclic(2), &[(8, &[0])]).unwrap();
        assert_eq!(z8.element(alloc::vec![-1]).unwrap().coords(), &[7]);
    }
}
