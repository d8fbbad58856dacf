//! Brute-force reference implementations over explicit element sets. Nothing
//! here touches lattices or Smith forms: submodules are closed sets of
//! coordinate vectors, and every predicate is the textbook quantifier loop.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use gps_core::{BaseRing, GradedModule, GradedSubmodule, Ideal};

pub type Elt = Vec<i64>;

pub struct Oracle {
    pub ring: BaseRing,
    pub orders: Vec<i64>,
    /// Factor indices grouped by degree.
    pub blocks: Vec<Vec<usize>>,
    /// Exponent of the module.
    pub exponent: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

impl Oracle {
    /// Only finite modules are supported.
    pub fn new(m: &GradedModule) -> Self {
        let orders: Vec<i64> = m.factors().iter().map(|f| f.order).collect();
        assert!(orders.iter().all(|&o| o > 0), "oracle needs a finite module");
        let mut degrees: Vec<_> = m.factors().iter().map(|f| f.degree.clone()).collect();
        degrees.sort();
        degrees.dedup();
        let blocks = degrees
            .iter()
            .map(|d| (0..orders.len()).filter(|&i| m.factors()[i].degree == *d).collect())
            .collect();
        let exponent = orders.iter().fold(1, |a, &o| lcm(a, o));
        Oracle { ring: m.ring(), orders, blocks, exponent }
    }

    fn reduce(&self, mut x: Elt) -> Elt {
        for (v, &o) in x.iter_mut().zip(&self.orders) {
            *v = v.rem_euclid(o);
        }
        x
    }

    pub fn add(&self, a: &Elt, b: &Elt) -> Elt {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn scale(&self, r: i64, a: &Elt) -> Elt {
        self.reduce(a.iter().map(|x| (r % self.exponent) * x).collect())
    }

    pub fn zero(&self) -> Elt {
        vec![0; self.orders.len()]
    }

    pub fn unit(&self, i: usize) -> Elt {
        let mut e = self.zero();
        e[i] = 1;
        self.reduce(e)
    }

    pub fn elements(&self) -> Vec<Elt> {
        let mut out = vec![self.zero()];
        for (i, &o) in self.orders.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|x| {
                    (0..o).map(move |v| {
                        let mut y = x.clone();
                        y[i] = v;
                        y
                    })
                })
                .collect();
        }
        out
    }

    pub fn block_elements(&self, b: usize) -> Vec<Elt> {
        self.elements().into_iter().filter(|x| (0..x.len()).all(|i| x[i] == 0 || self.blocks[b].contains(&i))).collect()
    }

    pub fn homogeneous(&self) -> Vec<Elt> {
        let mut out: BTreeSet<Elt> = BTreeSet::new();
        for b in 0..self.blocks.len() {
            out.extend(self.block_elements(b));
        }
        out.into_iter().collect()
    }

    /// Ring elements that realise every action on the module (and every residue of a finite ring).
    pub fn ring_elements(&self) -> Vec<i64> {
        if self.ring.is_finite() { (0..self.ring.modulus()).collect() } else { (0..self.exponent).collect() }
    }

    /// Subgroup generated by `gens`, by saturation under addition.
    pub fn span(&self, gens: &[Elt]) -> HashSet<Elt> {
        let mut set: HashSet<Elt> = HashSet::from([self.zero()]);
        let mut frontier = vec![self.zero()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    pub fn set_of(&self, m: &GradedModule, n: &GradedSubmodule) -> HashSet<Elt> {
        let gens: Vec<Elt> = m.generators(n).iter().map(|g| g.coords().to_vec()).collect();
        self.span(&gens)
    }

    pub fn all(&self) -> HashSet<Elt> {
        self.elements().into_iter().collect()
    }

    pub fn annihilates_quotient(&self, r: i64, n: &HashSet<Elt>) -> bool {
        (0..self.orders.len()).all(|i| n.contains(&self.scale(r, &self.unit(i))))
    }

    /// Some power `r^k`, `1 <= k <= 8`, sends `M` into `N`.
    pub fn power_annihilates(&self, r: i64, n: &HashSet<Elt>) -> bool {
        let mut p = 1i64;
        (1..=8).any(|_| {
            p = (p * r).rem_euclid(self.exponent.max(1) * self.ring.modulus().max(1));
            self.annihilates_quotient(p, n)
        })
    }

    fn ideal_from(&self, members: impl Iterator<Item = i64>) -> Ideal {
        let g = members.fold(if self.ring.is_finite() { self.ring.modulus() } else { self.exponent }, gcd);
        Ideal::new(self.ring, g)
    }

    /// `(N:M)` as the ideal generated by every `r` with `rM ⊆ N`.
    pub fn colon(&self, n: &HashSet<Elt>) -> Ideal {
        self.ideal_from(self.ring_elements().into_iter().filter(|&r| self.annihilates_quotient(r, n)))
    }

    pub fn radical_colon(&self, n: &HashSet<Elt>) -> Ideal {
        self.ideal_from(self.ring_elements().into_iter().filter(|&r| self.power_annihilates(r, n)))
    }

    pub fn is_proper(&self, n: &HashSet<Elt>) -> bool {
        n.len() < self.all().len()
    }

    /// `rm ∈ N` forces `m ∈ N` or `rM ⊆ N`, over homogeneous `m`.
    pub fn is_prime(&self, n: &HashSet<Elt>) -> bool {
        self.is_proper(n)
            && self.ring_elements().into_iter().all(|r| {
                let kills = self.annihilates_quotient(r, n);
                self.homogeneous().iter().all(|x| kills || n.contains(x) || !n.contains(&self.scale(r, x)))
            })
    }

    pub fn is_primary(&self, n: &HashSet<Elt>) -> bool {
        self.is_proper(n)
            && self.ring_elements().into_iter().all(|r| {
                let kills = self.power_annihilates(r, n);
                self.homogeneous().iter().all(|x| kills || n.contains(x) || !n.contains(&self.scale(r, x)))
            })
    }

    /// Every graded submodule, as a product of per-degree subgroups. A subgroup
    /// of a block with `k` cyclic factors needs at most `k` generators.
    pub fn submodules(&self) -> Vec<HashSet<Elt>> {
        let mut acc: Vec<HashSet<Elt>> = vec![HashSet::from([self.zero()])];
        for b in 0..self.blocks.len() {
            let elts = self.block_elements(b);
            let mut subgroups: BTreeSet<BTreeSet<Elt>> = BTreeSet::new();
            let k = self.blocks[b].len();
            let mut stack: Vec<Vec<usize>> = vec![vec![]];
            while let Some(idx) = stack.pop() {
                let gens: Vec<Elt> = idx.iter().map(|&i| elts[i].clone()).collect();
                subgroups.insert(self.span(&gens).into_iter().collect());
                if idx.len() < k {
                    let start = idx.last().map_or(0, |&i| i + 1);
                    for j in start..elts.len() {
                        let mut next = idx.clone();
                        next.push(j);
                        stack.push(next);
                    }
                }
            }
            acc = acc
                .iter()
                .flat_map(|a| {
                    subgroups.iter().map(move |s| {
                        let mut out = HashSet::new();
                        for x in a {
                            for y in s {
                                out.insert(self.add(x, y));
                            }
                        }
                        out
                    })
                })
                .collect();
        }
        acc
    }

    /// Intersection of the primes containing `n`; the whole module when there are none.
    pub fn radical(&self, n: &HashSet<Elt>, primes: &[HashSet<Elt>]) -> HashSet<Elt> {
        primes.iter().filter(|p| n.is_subset(p)).fold(self.all(), |acc, p| acc.intersection(p).cloned().collect())
    }

    pub fn in_primary_spectrum(&self, q: &HashSet<Elt>, primes: &[HashSet<Elt>]) -> bool {
        self.is_primary(q) && self.colon(&self.radical(q, primes)) == self.radical_colon(q)
    }
}

pub fn key(set: &HashSet<Elt>) -> BTreeSet<Elt> {
    set.iter().cloned().collect()
}
