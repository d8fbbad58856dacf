//! Enumeration of all graded submodules of a finite module as the product of
//! the per-degree subgroup lattices.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::module::GradedModule;
use crate::submodule::GradedSubmodule;

pub const DEFAULT_ENUM_BOUND: u64 = 20_000;

/// Every subgroup of `M_g` for block `b`: cyclic subgroups first, then joins
/// until no new subgroup appears.
fn block_subgroups(m: &GradedModule, b: usize) -> Vec<Lattice> {
    let block = &m.blocks()[b];
    let points = m.block_elements(b).expect("finite block");
    let relations = Lattice::relations(&block.orders);
    let span = |rows: Vec<Vec<i64>>| {
        let mut rows = rows;
        rows.extend(relations.rows().iter().cloned());
        Lattice::from_rows_mod(block.len(), rows, &block.orders)
    };
    let cyclic: BTreeSet<Lattice> = points.into_iter().map(|p| span(alloc::vec![p])).collect();
    let mut seen: BTreeSet<Lattice> = cyclic.clone();
    let mut frontier: Vec<Lattice> = cyclic.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for c in &cyclic {
            if c.is_subset(&s) {
                continue;
            }
            let joined = s.sum(c);
            if seen.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    seen.into_iter().collect()
}

/// Sort key for the canonical order: size ascending, then Hermite data.
pub fn canonical_sort(m: &GradedModule, subs: &mut [GradedSubmodule]) {
    subs.sort_by_cached_key(|n| (m.submodule_size(n), n.clone()));
}

/// `enumerate_graded_submodules(M)` with an explicit bound on `|M|`.
pub fn enumerate_graded_submodules(m: &GradedModule, bound: u64) -> Result<Vec<GradedSubmodule>> {
    let size = m.cardinality().ok_or(Error::InfiniteModule)?;
    if size > bound as u128 {
        return Err(Error::BoundExceeded { size, bound });
    }
    let per_block: Vec<Vec<Lattice>> = (0..m.blocks().len()).map(|b| block_subgroups(m, b)).collect();
    let mut out: Vec<Vec<Lattice>> = alloc::vec![Vec::new()];
    for choices in &per_block {
        let base = core::mem::take(&mut out);
        for partial in base {
            for c in choices {
                let mut next = partial.clone();
                next.push(c.clone());
                out.push(next);
            }
        }
    }
    let mut subs: Vec<GradedSubmodule> = out.into_iter().map(GradedSubmodule::from_blocks).collect();
    canonical_sort(m, &mut subs);
    Ok(subs)
}
