//! Graded submodules in canonical per-degree Hermite form, and the lattice
//! operations on them.
//!
//! With the ring concentrated in degree `e`, `R·M_g ⊆ M_g`, so a graded
//! submodule is exactly a choice of subgroup `N_g <= M_g` for every degree.

use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::group::Degree;
use crate::lattice::{Lattice, Row, Smith};
use crate::module::{GradedModule, ModuleElement};
use crate::ring::Ideal;

/// `N = ⊕ N_g`, one lattice per non-empty degree block of the ambient module.
/// Each lattice is the full preimage of `N_g` in `Z^k` and so contains the
/// factor relations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedSubmodule {
    blocks: Vec<Lattice>,
}

/// Smith invariants of `M_g / N_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientInvariants {
    pub free_rank: usize,
    /// `d_1 | d_2 | ... | d_t`, each `>= 2`.
    pub torsion: Vec<i64>,
}

impl QuotientInvariants {
    /// Orders of the nonzero classes of the quotient; `0` stands for infinite order.
    /// With the divisibility chain every achievable finite order divides `d_t`.
    pub fn nonzero_orders(&self) -> Vec<i64> {
        let mut out: Vec<i64> = match self.torsion.last() {
            Some(&top) => crate::arith::divisors(top).into_iter().filter(|&d| d > 1).collect(),
            None => Vec::new(),
        };
        if self.free_rank > 0 {
            out.push(0);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl GradedSubmodule {
    pub fn block_lattices(&self) -> &[Lattice] {
        &self.blocks
    }

    pub(crate) fn from_blocks(blocks: Vec<Lattice>) -> Self {
        GradedSubmodule { blocks }
    }
}

impl GradedModule {
    fn block_relations(&self, b: usize) -> Lattice {
        Lattice::relations(&self.blocks()[b].orders)
    }

    fn block_lattice(&self, b: usize, rows: Vec<Row>) -> Lattice {
        let block = &self.blocks()[b];
        let mut rows = rows;
        rows.extend(self.block_relations(b).rows().iter().cloned());
        Lattice::from_rows_mod(block.len(), rows, &block.orders)
    }

    pub fn zero_submodule(&self) -> GradedSubmodule {
        GradedSubmodule { blocks: (0..self.blocks().len()).map(|b| self.block_relations(b)).collect() }
    }

    pub fn whole(&self) -> GradedSubmodule {
        GradedSubmodule { blocks: self.blocks().iter().map(|b| Lattice::full(b.len())).collect() }
    }

    /// Builds a submodule from explicit per-block generator rows (block-local coordinates).
    pub fn submodule_from_block_rows(&self, rows: Vec<Vec<Row>>) -> GradedSubmodule {
        assert_eq!(rows.len(), self.blocks().len());
        GradedSubmodule { blocks: rows.into_iter().enumerate().map(|(b, r)| self.block_lattice(b, r)).collect() }
    }

    /// The smallest graded submodule containing `gens`: every generator is split
    /// into homogeneous components and each degree block is put in Hermite form.
    pub fn submodule_from_generators(&self, gens: &[ModuleElement]) -> Result<GradedSubmodule> {
        let mut per_block: Vec<Vec<Row>> = alloc::vec![Vec::new(); self.blocks().len()];
        for g in gens {
            if g.coords().len() != self.rank() {
                return Err(Error::Arity { expected: self.rank(), got: g.coords().len() });
            }
            for (b, block) in self.blocks().iter().enumerate() {
                let row: Row = block.indices.iter().map(|&i| g.coords()[i]).collect();
                if row.iter().any(|&x| x != 0) {
                    per_block[b].push(row);
                }
            }
        }
        Ok(self.submodule_from_block_rows(per_block))
    }

    /// Same as [`GradedModule::submodule_from_generators`] on raw coordinate vectors.
    pub fn span(&self, gens: &[Vec<i64>]) -> Result<GradedSubmodule> {
        let gens = gens.iter().map(|g| self.element(g.clone())).collect::<Result<Vec<_>>>()?;
        self.submodule_from_generators(&gens)
    }

    /// Verifies that `n` has the block shape of this module and contains the relations.
    pub fn check(&self, n: &GradedSubmodule) -> Result<()> {
        if n.blocks.len() != self.blocks().len() {
            return Err(Error::ModuleMismatch);
        }
        for (b, l) in n.blocks.iter().enumerate() {
            if l.ncols() != self.blocks()[b].len() || !self.block_relations(b).is_subset(l) {
                return Err(Error::ModuleMismatch);
            }
        }
        Ok(())
    }

    pub fn sum(&self, a: &GradedSubmodule, b: &GradedSubmodule) -> GradedSubmodule {
        GradedSubmodule { blocks: a.blocks.iter().zip(&b.blocks).map(|(x, y)| x.sum(y)).collect() }
    }

    pub fn intersect(&self, a: &GradedSubmodule, b: &GradedSubmodule) -> GradedSubmodule {
        GradedSubmodule { blocks: a.blocks.iter().zip(&b.blocks).map(|(x, y)| x.intersect(y)).collect() }
    }

    /// `a ⊆ b`.
    pub fn contains_submodule(&self, b: &GradedSubmodule, a: &GradedSubmodule) -> bool {
        a.blocks.iter().zip(&b.blocks).all(|(x, y)| x.is_subset(y))
    }

    pub fn contains_element(&self, n: &GradedSubmodule, m: &ModuleElement) -> bool {
        self.blocks().iter().zip(&n.blocks).all(|(block, l)| {
            let row: Row = block.indices.iter().map(|&i| m.coords()[i]).collect();
            l.contains(&row)
        })
    }

    pub fn is_proper(&self, n: &GradedSubmodule) -> bool {
        n.blocks.iter().any(|l| !l.is_full())
    }

    pub fn block_smith(&self, n: &GradedSubmodule, b: usize) -> Smith {
        n.blocks[b].smith()
    }

    /// Smith invariants of `M_g / N_g`; the trivial group for degrees without factors.
    pub fn quotient_invariants(&self, n: &GradedSubmodule, g: &Degree) -> QuotientInvariants {
        match self.block_of(g) {
            None => QuotientInvariants { free_rank: 0, torsion: Vec::new() },
            Some(b) => {
                let s = self.block_smith(n, b);
                QuotientInvariants { free_rank: s.free_rank(), torsion: s.torsion() }
            }
        }
    }

    /// `(N :_R M)`: the intersection over factors `i` of `{ r : r·e_i ∈ N }`.
    pub fn colon(&self, n: &GradedSubmodule) -> Ideal {
        let mut gen = 1i64;
        for (b, block) in self.blocks().iter().enumerate() {
            let s = self.block_smith(n, b);
            for j in 0..block.len() {
                let mut e = alloc::vec![0; block.len()];
                e[j] = 1;
                gen = lcm(gen, s.order_of(&e));
            }
        }
        Ideal::new(self.ring(), gen)
    }

    /// `Ann(M) = (0 :_R M)`.
    pub fn annihilator(&self) -> Ideal {
        self.colon(&self.zero_submodule())
    }

    /// `I·M`.
    pub fn ideal_times_module(&self, i: Ideal) -> GradedSubmodule {
        self.ideal_times(i, &self.whole())
    }

    /// `I·N`.
    pub fn ideal_times(&self, i: Ideal, n: &GradedSubmodule) -> GradedSubmodule {
        let c = if i.is_zero() { 0 } else { i.generator() };
        let rows = n.blocks.iter().map(|l| l.rows().iter().map(|r| r.iter().map(|x| x * c).collect()).collect()).collect();
        self.submodule_from_block_rows(rows)
    }

    /// `|N|`, for finite modules.
    pub fn submodule_size(&self, n: &GradedSubmodule) -> Option<u128> {
        let mut total: u128 = 1;
        for (block, l) in self.blocks().iter().zip(&n.blocks) {
            let card = block.cardinality()?;
            let idx = l.index()? as u128;
            total *= card / idx;
        }
        Some(total)
    }

    /// Canonical generators: Hermite rows embedded in `M`, reduced, zero rows dropped.
    pub fn generators(&self, n: &GradedSubmodule) -> Vec<ModuleElement> {
        let mut out = Vec::new();
        for (block, l) in self.blocks().iter().zip(&n.blocks) {
            for row in l.rows() {
                let mut coords = alloc::vec![0; self.rank()];
                for (j, &i) in block.indices.iter().enumerate() {
                    coords[i] = row[j];
                }
                let e = self.element(coords).expect("arity");
                if !e.is_zero() {
                    out.push(e);
                }
            }
        }
        out
    }

    /// Short text form: `0`, `2Z`, `3Z6`, `Z6` for single-factor modules,
    /// otherwise the canonical generators, e.g. `<(4,0),(0,2)>`.
    pub fn describe(&self, n: &GradedSubmodule) -> String {
        if *n == self.zero_submodule() {
            return "0".into();
        }
        if self.rank() == 1 {
            let d = n.blocks[0].rows()[0][0];
            let base = match self.factors()[0].order {
                0 => "Z".into(),
                k => alloc::format!("Z{k}"),
            };
            return if d == 1 { base } else { alloc::format!("{d}{base}") };
        }
        let gens: Vec<String> = self.generators(n).iter().map(|g| alloc::format!("{g}")).collect();
        alloc::format!("<{}>", gens.join(","))
    }

    /// Additive order of `m + N` in `M/N` (`0` = infinite).
    pub fn order_mod(&self, n: &GradedSubmodule, m: &ModuleElement) -> i64 {
        let mut ord = 1;
        for (b, block) in self.blocks().iter().enumerate() {
            let row: Row = block.indices.iter().map(|&i| m.coords()[i]).collect();
            ord = lcm(ord, self.block_smith(n, b).order_of(&row));
        }
        ord
    }
}

/// `colon_ideal(N, M)`.
pub fn colon_ideal(n: &GradedSubmodule, m: &GradedModule) -> Ideal {
    m.colon(n)
}

/// `quotient_invariants(M, N, g)`.
pub fn quotient_invariants(m: &GradedModule, n: &GradedSubmodule, g: &Degree) -> QuotientInvariants {
    m.quotient_invariants(n, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GradingGroup;
    use crate::ring::BaseRing;
    use alloc::vec;

    fn zxz() -> GradedModule {
        GradedModule::from_spec(BaseRing::Z, GradingGroup::cyclic(2), &[(0, &[0]), (0, &[1])]).unwrap()
    }

    fn cyclic(ring: i64, n: i64) -> GradedModule {
        GradedModule::from_spec(BaseRing::new(ring).unwrap(), GradingGroup::cyclic(2), &[(n, &[0])]).unwrap()
    }

    #[test]
    fn generators_are_canonicalized() {
        let m = zxz();
        let n = m.span(&[vec![4, 0], vec![6, 0]]).unwrap();
        assert_eq!(n, m.span(&[vec![2, 0]]).unwrap());
        assert_eq!(m.span(&[]).unwrap(), m.zero_submodule());
        assert_eq!(m.span(&[vec![1, 1]]).unwrap(), m.whole());
        assert!(m.span(&[vec![1]]).is_err());
    }

    #[test]
    fn lattice_operations() {
        let m = zxz();
        let n = m.span(&[vec![4, 0]]).unwrap();
        let n2 = m.span(&[vec![0, 4]]).unwrap();
        assert_eq!(m.intersect(&n, &n2), m.zero_submodule());
        assert_eq!(m.sum(&n, &m.zero_submodule()), n);
        let s = m.span(&[vec![4, 0], vec![6, 0]]).unwrap();
        assert!(m.contains_element(&s, &m.element(vec![2, 0]).unwrap()));
        assert!(m.is_proper(&n));
        assert!(!m.is_proper(&m.whole()));
    }

    #[test]
    fn colon_examples() {
        let m = cyclic(6, 6);
        let n = m.span(&[vec![2]]).unwrap();
        assert_eq!(m.colon(&n), Ideal::new(BaseRing::zn(6), 2));
        let m = zxz();
        let n = m.span(&[vec![4, 0]]).unwrap();
        assert_eq!(m.colon(&n), BaseRing::Z.zero_ideal());
        assert_eq!(m.colon(&m.whole()), BaseRing::Z.unit_ideal());
    }

    #[test]
    fn quotient_invariant_examples() {
        let e = Degree(vec![0]);
        let z = GradedModule::from_spec(BaseRing::Z, GradingGroup::cyclic(2), &[(0, &[0])]).unwrap();
        let q = z.quotient_invariants(&z.span(&[vec![4]]).unwrap(), &e);
        assert_eq!(q, QuotientInvariants { free_rank: 0, torsion: vec![4] });
        let m = zxz();
        let q = m.quotient_invariants(&m.zero_submodule(), &Degree(vec![1]));
        assert_eq!(q, QuotientInvariants { free_rank: 1, torsion: vec![] });
        let z8 = cyclic(8, 8);
        let q = z8.quotient_invariants(&z8.span(&[vec![4]]).unwrap(), &e);
        assert_eq!(q, QuotientInvariants { free_rank: 0, torsion: vec![4] });
    }

    #[test]
    fn ideal_times_module() {
        let m = cyclic(8, 8);
        let i = Ideal::new(BaseRing::zn(8), 2);
        assert_eq!(m.ideal_times_module(i), m.span(&[vec![2]]).unwrap());
        assert_eq!(m.annihilator(), BaseRing::zn(8).zero_ideal());
        assert_eq!(m.submodule_size(&m.span(&[vec![2]]).unwrap()), Some(4));
    }
}
