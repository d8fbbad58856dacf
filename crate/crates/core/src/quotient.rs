//! Quotient modules `M/K` presented per degree through Smith form, and the
//! graded epimorphisms built from projections and factor permutations.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, Row, Smith};
use crate::module::{Factor, GradedModule, ModuleElement};
use crate::submodule::GradedSubmodule;

#[derive(Clone, Debug)]
struct BlockProjection {
    /// `None` when `K_g = 0`: the block is carried over unchanged.
    smith: Option<Smith>,
    /// Smith coordinates that survive in the quotient (`d_j != 1`).
    kept: Vec<usize>,
    target_block: Option<usize>,
}

/// The canonical projection `M → M/K`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: GradedModule,
    target: GradedModule,
    kernel: GradedSubmodule,
    blocks: Vec<BlockProjection>,
}

/// `quotient_module(M, K)`.
pub fn quotient_module(m: &GradedModule, k: &GradedSubmodule) -> Result<QuotientMap> {
    m.check(k)?;
    let mut factors = Vec::new();
    let mut blocks = Vec::new();
    for (b, block) in m.blocks().iter().enumerate() {
        let lat = &k.block_lattices()[b];
        let proj = if *lat == Lattice::relations(&block.orders) {
            for &order in &block.orders {
                factors.push(Factor { order, degree: block.degree.clone() });
            }
            BlockProjection { smith: None, kept: (0..block.len()).collect(), target_block: None }
        } else {
            let smith = lat.smith();
            let kept: Vec<usize> = (0..block.len()).filter(|&j| smith.diag.get(j).is_none_or(|&d| d != 1)).collect();
            for &j in &kept {
                factors.push(Factor { order: smith.diag.get(j).copied().unwrap_or(0), degree: block.degree.clone() });
            }
            BlockProjection { smith: Some(smith), kept, target_block: None }
        };
        blocks.push(proj);
    }
    let target = GradedModule::new(m.ring(), m.group().clone(), factors)?;
    for (b, proj) in blocks.iter_mut().enumerate() {
        if !proj.kept.is_empty() {
            proj.target_block = target.block_of(&m.blocks()[b].degree);
        }
    }
    Ok(QuotientMap { source: m.clone(), target, kernel: k.clone(), blocks })
}

impl QuotientMap {
    pub fn source(&self) -> &GradedModule {
        &self.source
    }

    pub fn target(&self) -> &GradedModule {
        &self.target
    }

    pub fn kernel(&self) -> &GradedSubmodule {
        &self.kernel
    }

    fn to_target_coords(&self, b: usize, row: &[i64]) -> Row {
        let p = &self.blocks[b];
        let y = match &p.smith {
            Some(s) => s.transform(row),
            None => row.to_vec(),
        };
        p.kept.iter().map(|&j| y[j]).collect()
    }

    pub fn project(&self, x: &ModuleElement) -> ModuleElement {
        let mut coords = alloc::vec![0; self.target.rank()];
        for (b, block) in self.source.blocks().iter().enumerate() {
            let Some(t) = self.blocks[b].target_block else { continue };
            let row: Row = block.indices.iter().map(|&i| x.coords()[i]).collect();
            let y = self.to_target_coords(b, &row);
            for (pos, &i) in self.target.blocks()[t].indices.iter().enumerate() {
                coords[i] = y[pos];
            }
        }
        self.target.element(coords).expect("arity")
    }

    /// `f(N) = (N + K)/K`.
    pub fn image(&self, n: &GradedSubmodule) -> GradedSubmodule {
        let mut rows: Vec<Vec<Row>> = alloc::vec![Vec::new(); self.target.blocks().len()];
        for (b, lat) in n.block_lattices().iter().enumerate() {
            let Some(t) = self.blocks[b].target_block else { continue };
            for r in lat.rows() {
                rows[t].push(self.to_target_coords(b, r));
            }
        }
        self.target.submodule_from_block_rows(rows)
    }

    /// `f^{-1}(N')`.
    pub fn preimage(&self, n: &GradedSubmodule) -> GradedSubmodule {
        let mut rows: Vec<Vec<Row>> = Vec::new();
        for (b, block) in self.source.blocks().iter().enumerate() {
            let p = &self.blocks[b];
            let k = block.len();
            let mut ys: Vec<Row> = Vec::new();
            if let Some(t) = p.target_block {
                for r in n.block_lattices()[t].rows() {
                    let mut y = alloc::vec![0; k];
                    for (pos, &j) in p.kept.iter().enumerate() {
                        y[j] = r[pos];
                    }
                    ys.push(y);
                }
            }
            for j in (0..k).filter(|j| !p.kept.contains(j)) {
                let mut y = alloc::vec![0; k];
                y[j] = 1;
                ys.push(y);
            }
            let xs = match &p.smith {
                Some(s) => ys.iter().map(|y| s.untransform(y)).collect(),
                None => ys,
            };
            rows.push(xs);
        }
        self.source.submodule_from_block_rows(rows)
    }
}

/// A degree- and order-preserving permutation of factors; target factor `j`
/// is source factor `perm[j]`.
#[derive(Clone, Debug)]
pub struct FactorPermutation {
    source: GradedModule,
    target: GradedModule,
    perm: Vec<usize>,
}

impl FactorPermutation {
    pub fn new(source: &GradedModule, perm: Vec<usize>) -> Result<Self> {
        let n = source.rank();
        let mut seen = alloc::vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || core::mem::replace(&mut seen[p], true)) {
            return Err(Error::UnsupportedMorphism("not a permutation of the factors".into()));
        }
        let factors = perm.iter().map(|&p| source.factors()[p].clone()).collect();
        let target = GradedModule::new(source.ring(), source.group().clone(), factors)?;
        Ok(FactorPermutation { source: source.clone(), target, perm })
    }

    /// Permutations that map the module onto itself (`target == source`).
    pub fn automorphisms(m: &GradedModule, limit: usize) -> Vec<FactorPermutation> {
        let n = m.rank();
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |p| {
            if out.len() < limit && p.iter().enumerate().all(|(j, &i)| m.factors()[j] == m.factors()[i]) {
                out.push(FactorPermutation::new(m, p.to_vec()).expect("valid permutation"));
            }
        });
        out
    }

    pub fn source(&self) -> &GradedModule {
        &self.source
    }

    pub fn target(&self) -> &GradedModule {
        &self.target
    }

    fn map_coords(&self, x: &[i64]) -> Vec<i64> {
        self.perm.iter().map(|&p| x[p]).collect()
    }

    fn unmap_coords(&self, y: &[i64]) -> Vec<i64> {
        let mut x = alloc::vec![0; y.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            x[p] = y[j];
        }
        x
    }

    pub fn image(&self, n: &GradedSubmodule) -> GradedSubmodule {
        let gens: Vec<Vec<i64>> = self.source.generators(n).iter().map(|g| self.map_coords(g.coords())).collect();
        self.target.span(&gens).expect("arity")
    }

    pub fn preimage(&self, n: &GradedSubmodule) -> GradedSubmodule {
        let gens: Vec<Vec<i64>> = self.target.generators(n).iter().map(|g| self.unmap_coords(g.coords())).collect();
        self.source.span(&gens).expect("arity")
    }
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// The graded epimorphisms supported for transport of spectra.
#[derive(Clone, Debug)]
pub enum GradedEpimorphism {
    Projection(QuotientMap),
    Permutation(FactorPermutation),
    /// `second ∘ first`.
    Compose(Box<GradedEpimorphism>, Box<GradedEpimorphism>),
}

impl GradedEpimorphism {
    pub fn compose(first: GradedEpimorphism, second: GradedEpimorphism) -> Result<Self> {
        if first.target() != second.source() {
            return Err(Error::UnsupportedMorphism("composition of mismatched modules".into()));
        }
        Ok(GradedEpimorphism::Compose(Box::new(first), Box::new(second)))
    }

    pub fn source(&self) -> &GradedModule {
        match self {
            Self::Projection(q) => q.source(),
            Self::Permutation(p) => &p.source,
            Self::Compose(f, _) => f.source(),
        }
    }

    pub fn target(&self) -> &GradedModule {
        match self {
            Self::Projection(q) => q.target(),
            Self::Permutation(p) => &p.target,
            Self::Compose(_, g) => g.target(),
        }
    }

    pub fn image(&self, n: &GradedSubmodule) -> GradedSubmodule {
        match self {
            Self::Projection(q) => q.image(n),
            Self::Permutation(p) => p.image(n),
            Self::Compose(f, g) => g.image(&f.image(n)),
        }
    }

    pub fn preimage(&self, n: &GradedSubmodule) -> GradedSubmodule {
        match self {
            Self::Projection(q) => q.preimage(n),
            Self::Permutation(p) => p.preimage(n),
            Self::Compose(f, g) => f.preimage(&g.preimage(n)),
        }
    }

    pub fn kernel(&self) -> GradedSubmodule {
        self.preimage(&self.target().zero_submodule())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.kernel() == self.source().zero_submodule()
    }
}
