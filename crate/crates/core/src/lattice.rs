//! Integer row lattices in `Z^k`: Hermite normal form, membership, sums,
//! intersections and Smith normal form with column transforms.
//!
//! A degree block `M_g = Z_{n_1} x ... x Z_{n_k}` is presented as `Z^k / K` with
//! `K = n_1 Z x ... x n_k Z` (a zero order contributes no relation). A subgroup
//! `N_g <= M_g` is stored as its full preimage `L` in `Z^k`, so `K <= L` always.
//! The row-style HNF of `L` is unique, which makes equality syntactic.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{div_floor, gcd, lcm};

pub type Row = Vec<i64>;

/// A sublattice of `Z^k` in canonical row Hermite normal form.
///
/// Rows are nonzero, pivot columns strictly increase, pivots are positive and
/// every entry above a pivot lies in `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lattice {
    ncols: usize,
    rows: Vec<Row>,
}

fn pivot_col(row: &[i64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

fn axpy(target: &mut [i64], q: i64, src: &[i64]) {
    // target -= q * src
    if q == 0 {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        *t -= q * s;
    }
}

fn is_relation_row(row: &[i64], orders: &[i64]) -> bool {
    let mut nz = row.iter().enumerate().filter(|(_, &x)| x != 0);
    matches!((nz.next(), nz.next()), (Some((j, &x)), None) if x.abs() == orders[j])
}

impl Lattice {
    /// The whole of `Z^k`.
    pub fn full(ncols: usize) -> Self {
        let rows = (0..ncols)
            .map(|i| {
                let mut r = vec![0; ncols];
                r[i] = 1;
                r
            })
            .collect();
        Lattice { ncols, rows }
    }

    pub fn zero(ncols: usize) -> Self {
        Lattice { ncols, rows: Vec::new() }
    }

    /// Relation lattice `K` for the given cyclic orders (order 0 means `Z`).
    pub fn relations(orders: &[i64]) -> Self {
        let rows = orders
            .iter()
            .enumerate()
            .filter(|&(_, &n)| n != 0)
            .map(|(i, &n)| {
                let mut r = vec![0; orders.len()];
                r[i] = n;
                r
            })
            .collect();
        Self::from_rows(orders.len(), rows)
    }

    /// HNF of the span of `rows`.
    pub fn from_rows(ncols: usize, rows: Vec<Row>) -> Self {
        Self::from_rows_mod(ncols, rows, &[])
    }

    /// HNF of the span of `rows`, using `orders` (when non-empty) to keep
    /// intermediate entries small. The relation rows must already be part of
    /// the span for this to be sound; callers adjoin them explicitly.
    pub fn from_rows_mod(ncols: usize, rows: Vec<Row>, orders: &[i64]) -> Self {
        debug_assert!(orders.is_empty() || orders.len() == ncols);
        let mut pool: Vec<Row> = rows
            .into_iter()
            .inspect(|r| assert_eq!(r.len(), ncols, "row arity mismatch"))
            .filter(|r| r.iter().any(|&x| x != 0))
            .collect();
        let mut out: Vec<Row> = Vec::new();
        for col in 0..ncols {
            loop {
                // rows of the pool that are nonzero in `col` (all are zero before `col`)
                let mut best: Option<usize> = None;
                let mut count = 0;
                for (i, r) in pool.iter().enumerate() {
                    if r[col] != 0 {
                        count += 1;
                        if best.is_none_or(|b| r[col].abs() < pool[b][col].abs()) {
                            best = Some(i);
                        }
                    }
                }
                let Some(b) = best else { break };
                if count == 1 {
                    let mut r = pool.swap_remove(b);
                    if r[col] < 0 {
                        r.iter_mut().for_each(|x| *x = -*x);
                    }
                    out.push(r);
                    break;
                }
                let p = pool[b].clone();
                for (i, r) in pool.iter_mut().enumerate() {
                    if i != b && r[col] != 0 {
                        let q = r[col] / p[col];
                        axpy(r, q, &p);
                    }
                }
                if !orders.is_empty() {
                    // reduce by the relation rows, which must themselves survive
                    for r in pool.iter_mut().filter(|r| !is_relation_row(r, orders)) {
                        for j in col + 1..ncols {
                            if orders[j] != 0 && r[j].abs() >= orders[j] {
                                r[j] %= orders[j];
                            }
                        }
                    }
                }
                pool.retain(|r| r.iter().any(|&x| x != 0));
            }
            pool.retain(|r| r.iter().any(|&x| x != 0));
        }
        debug_assert!(pool.is_empty());
        let mut lat = Lattice { ncols, rows: out };
        lat.reduce_above();
        lat
    }

    fn reduce_above(&mut self) {
        for i in 0..self.rows.len() {
            let c = pivot_col(&self.rows[i]).unwrap();
            let p = self.rows[i][c];
            let piv = self.rows[i].clone();
            for j in 0..i {
                let q = div_floor(self.rows[j][c], p);
                axpy(&mut self.rows[j], q, &piv);
            }
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols && self.rows.iter().enumerate().all(|(i, r)| r[i] == 1)
    }

    pub fn pivots(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.rows.iter().map(|r| {
            let c = pivot_col(r).unwrap();
            (c, r[c])
        })
    }

    /// Index `[Z^k : L]`, or `None` when `L` is not of full rank.
    pub fn index(&self) -> Option<i64> {
        (self.rank() == self.ncols).then(|| self.pivots().map(|(_, p)| p).product())
    }

    /// Membership by division along the echelon pivots.
    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut v = v.to_vec();
        for r in &self.rows {
            let c = pivot_col(r).unwrap();
            if pivot_col(&v).is_some_and(|vc| vc < c) {
                return false;
            }
            if v[c] % r[c] != 0 {
                return false;
            }
            let q = v[c] / r[c];
            axpy(&mut v, q, r);
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn is_subset(&self, other: &Lattice) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ncols, other.ncols);
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Lattice::from_rows(self.ncols, rows)
    }

    /// `L1 ∩ L2` via the kernel trick: echelonize `[[A, A], [B, 0]]`; rows whose
    /// first half vanishes span `{(0, w) : w ∈ L1 ∩ L2}`.
    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ncols, other.ncols);
        let k = self.ncols;
        let mut rows = Vec::new();
        for a in &self.rows {
            let mut r = a.clone();
            r.extend_from_slice(a);
            rows.push(r);
        }
        for b in &other.rows {
            let mut r = b.clone();
            r.extend(core::iter::repeat_n(0, k));
            rows.push(r);
        }
        let big = Lattice::from_rows(2 * k, rows);
        let kept = big
            .rows
            .into_iter()
            .filter(|r| r[..k].iter().all(|&x| x == 0))
            .map(|r| r[k..].to_vec())
            .collect();
        Lattice::from_rows(k, kept)
    }

    /// The sublattice `{ c·v : v ∈ L }`.
    pub fn scale(&self, c: i64) -> Lattice {
        let rows = self.rows.iter().map(|r| r.iter().map(|x| x * c).collect()).collect();
        Lattice::from_rows(self.ncols, rows)
    }

    pub fn smith(&self) -> Smith {
        Smith::of_rows(self.ncols, &self.rows)
    }
}

/// Smith form `U·B·V = D` of a row basis `B`, keeping the column transform `V`
/// and its inverse. Since `U` is unimodular, `L·V` is spanned by the rows of `D`,
/// so `x ↦ x·V` identifies `Z^k / L` with `⊕ Z/d_i ⊕ Z^(k-r)`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub ncols: usize,
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_r`.
    pub diag: Vec<i64>,
    pub v: Vec<Row>,
    pub v_inv: Vec<Row>,
}

impl Smith {
    pub fn of_rows(ncols: usize, rows: &[Row]) -> Smith {
        let mut a: Vec<Row> = rows.to_vec();
        let k = ncols;
        let mut v: Vec<Row> = Lattice::full(k).rows;
        let mut v_inv: Vec<Row> = v.clone();
        let nrows = a.len();

        // column op: col_j -= q * col_t ; V likewise ; V^{-1}: row_t += q * row_j
        let col_sub = |a: &mut Vec<Row>, v: &mut Vec<Row>, vi: &mut Vec<Row>, j: usize, t: usize, q: i64| {
            if q == 0 {
                return;
            }
            for r in a.iter_mut() {
                r[j] -= q * r[t];
            }
            for r in v.iter_mut() {
                r[j] -= q * r[t];
            }
            let rj = vi[j].clone();
            for (x, y) in vi[t].iter_mut().zip(rj) {
                *x += q * y;
            }
        };
        let col_swap = |a: &mut Vec<Row>, v: &mut Vec<Row>, vi: &mut Vec<Row>, i: usize, j: usize| {
            if i == j {
                return;
            }
            for r in a.iter_mut() {
                r.swap(i, j);
            }
            for r in v.iter_mut() {
                r.swap(i, j);
            }
            vi.swap(i, j);
        };

        let mut diag = Vec::new();
        let mut t = 0;
        while t < nrows.min(k) {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..nrows {
                for j in t..k {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            col_swap(&mut a, &mut v, &mut v_inv, t, bj);
            loop {
                let p = a[t][t];
                let mut dirty = false;
                for i in t + 1..nrows {
                    if a[i][t] != 0 {
                        let q = a[i][t] / p;
                        let pr = a[t].clone();
                        axpy(&mut a[i], q, &pr);
                        if a[i][t] != 0 {
                            dirty = true;
                        }
                    }
                }
                for j in t + 1..k {
                    if a[t][j] != 0 {
                        let q = a[t][j] / p;
                        col_sub(&mut a, &mut v, &mut v_inv, j, t, q);
                        if a[t][j] != 0 {
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    // bring the smallest remaining entry of row/col t to the pivot
                    let mut best = (t, t);
                    for i in t..nrows {
                        if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                            best = (i, t);
                        }
                    }
                    for j in t..k {
                        if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                            best = (t, j);
                        }
                    }
                    a.swap(t, best.0);
                    col_swap(&mut a, &mut v, &mut v_inv, t, best.1);
                    continue;
                }
                // divisibility: if some trailing entry is not a multiple, fold its row in
                let p = a[t][t];
                let bad = (t + 1..nrows).find(|&i| (t + 1..k).any(|j| a[i][j] % p != 0));
                match bad {
                    Some(i) => {
                        let ri = a[i].clone();
                        for (x, y) in a[t].iter_mut().zip(ri) {
                            *x += y;
                        }
                    }
                    None => break,
                }
            }
            if a[t][t] < 0 {
                a[t].iter_mut().for_each(|x| *x = -*x);
            }
            diag.push(a[t][t]);
            t += 1;
        }
        debug_assert!(diag.windows(2).all(|w| w[1] % w[0] == 0));
        Smith { ncols: k, diag, v, v_inv }
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn free_rank(&self) -> usize {
        self.ncols - self.diag.len()
    }

    /// Invariant factors `>= 2`.
    pub fn torsion(&self) -> Vec<i64> {
        self.diag.iter().copied().filter(|&d| d != 1).collect()
    }

    /// `x·V`.
    pub fn transform(&self, x: &[i64]) -> Row {
        (0..self.ncols).map(|j| x.iter().zip(&self.v).map(|(a, r)| a * r[j]).sum()).collect()
    }

    /// `y·V^{-1}`.
    pub fn untransform(&self, y: &[i64]) -> Row {
        (0..self.ncols).map(|j| y.iter().zip(&self.v_inv).map(|(a, r)| a * r[j]).sum()).collect()
    }

    /// Additive order of the class of `x` in `Z^k / L`; `0` means infinite order.
    pub fn order_of(&self, x: &[i64]) -> i64 {
        let y = self.transform(x);
        let mut ord = 1;
        for (j, &yj) in y.iter().enumerate() {
            match self.diag.get(j) {
                Some(&d) => ord = lcm(ord, d / gcd(yj, d)),
                None => {
                    if yj != 0 {
                        return 0;
                    }
                }
            }
        }
        ord
    }
}
