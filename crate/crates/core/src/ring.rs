//! The base ring `Z` or `Z_n`, concentrated in degree `e`, and its principal ideals.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, divides, gcd, lcm};
use crate::error::{Error, Result};

/// `Z` when `modulus == 0`, otherwise `Z_modulus`.
///
/// `Z_1` (the zero ring) is accepted only as a derived ring, e.g. `R/Ann(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseRing {
    modulus: i64,
}

impl BaseRing {
    pub const Z: BaseRing = BaseRing { modulus: 0 };

    pub fn new(modulus: i64) -> Result<Self> {
        if modulus < 0 || modulus == 1 {
            return Err(Error::InvalidRing(modulus));
        }
        Ok(BaseRing { modulus })
    }

    pub fn zn(n: i64) -> Self {
        Self::new(n).expect("modulus >= 2")
    }

    /// Like [`BaseRing::new`] but also admits the zero ring `Z_1`.
    pub fn quotient(modulus: i64) -> Self {
        assert!(modulus >= 0);
        BaseRing { modulus }
    }

    pub fn modulus(self) -> i64 {
        self.modulus
    }

    pub fn is_finite(self) -> bool {
        self.modulus != 0
    }

    pub fn normalize(self, r: i64) -> i64 {
        if self.modulus == 0 { r } else { r.rem_euclid(self.modulus) }
    }

    pub fn mul(self, a: i64, b: i64) -> i64 {
        self.normalize(a * b)
    }

    pub fn is_unit(self, r: i64) -> bool {
        match self.modulus {
            0 => r == 1 || r == -1,
            n => gcd(r, n) == 1,
        }
    }

    pub fn is_nilpotent(self, r: i64) -> bool {
        match self.modulus {
            0 => r == 0,
            n => divides(arith::radical(n), r),
        }
    }

    /// A PID that is also a domain: `Z` or `Z_p`.
    pub fn is_pid_domain(self) -> bool {
        self.modulus == 0 || arith::is_prime(self.modulus)
    }

    pub fn is_field(self) -> bool {
        arith::is_prime(self.modulus)
    }

    /// Every element, for finite rings.
    pub fn elements(self) -> Option<impl Iterator<Item = i64>> {
        (self.modulus != 0).then_some(0..self.modulus)
    }

    /// All ideals of a finite ring, ascending by generator.
    pub fn ideals(self) -> Option<Vec<Ideal>> {
        (self.modulus != 0).then(|| arith::divisors(self.modulus).into_iter().map(|d| Ideal::new(self, d)).collect())
    }

    /// The prime ideals of a finite ring.
    pub fn spectrum(self) -> Option<Vec<Ideal>> {
        (self.modulus != 0).then(|| arith::prime_divisors(self.modulus).into_iter().map(|p| Ideal::new(self, p)).collect())
    }

    pub fn zero_ideal(self) -> Ideal {
        Ideal::new(self, 0)
    }

    pub fn unit_ideal(self) -> Ideal {
        Ideal::new(self, 1)
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            0 => f.write_str("Z"),
            n => write!(f, "Z{n}"),
        }
    }
}

/// A principal ideal with its canonical generator: `c >= 0` over `Z`,
/// `c = gcd(raw, n)` (a divisor of `n`) over `Z_n`. The zero ideal of `Z_n` has `c = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    ring: BaseRing,
    generator: i64,
}

impl Ideal {
    pub fn new(ring: BaseRing, raw: i64) -> Self {
        let generator = match ring.modulus {
            0 => raw.abs(),
            n => gcd(raw, n),
        };
        Ideal { ring, generator }
    }

    pub fn ring(self) -> BaseRing {
        self.ring
    }

    pub fn generator(self) -> i64 {
        self.generator
    }

    pub fn is_zero(self) -> bool {
        self.generator == self.ring.modulus
    }

    pub fn is_unit(self) -> bool {
        self.generator == 1
    }

    pub fn is_proper(self) -> bool {
        !self.is_unit()
    }

    pub fn contains(self, r: i64) -> bool {
        divides(self.generator, self.ring.normalize(r))
    }

    /// `self ⊆ other`.
    pub fn is_subset(self, other: Ideal) -> bool {
        debug_assert_eq!(self.ring, other.ring);
        divides(other.generator, self.generator)
    }

    pub fn sum(self, other: Ideal) -> Ideal {
        Ideal::new(self.ring, gcd(self.generator, other.generator))
    }

    pub fn intersect(self, other: Ideal) -> Ideal {
        Ideal::new(self.ring, lcm(self.generator, other.generator))
    }

    pub fn product(self, other: Ideal) -> Ideal {
        Ideal::new(self.ring, self.generator * other.generator)
    }

    /// `Gr(I)`, which equals `√I` for a trivially graded ring.
    pub fn radical(self) -> Ideal {
        Ideal::new(self.ring, arith::radical(self.generator))
    }

    pub fn is_prime(self) -> bool {
        match self.ring.modulus {
            0 => self.generator == 0 || arith::is_prime(self.generator),
            _ => arith::is_prime(self.generator),
        }
    }

    /// Image in `R/J` for an ideal `J ⊆ self`; `target` is `R/J` presented as `Z_m`.
    pub fn reduce_to(self, target: BaseRing) -> Ideal {
        Ideal::new(target, self.generator)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = if self.is_zero() { 0 } else { self.generator };
        write!(f, "({g})")
    }
}

/// `ideal_radical`: the graded radical of `I`.
pub fn ideal_radical(i: Ideal) -> Ideal {
    i.radical()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radical_examples() {
        assert_eq!(Ideal::new(BaseRing::Z, 4).radical(), Ideal::new(BaseRing::Z, 2));
        let z8 = BaseRing::zn(8);
        assert_eq!(z8.zero_ideal().radical(), Ideal::new(z8, 2));
        let z6 = BaseRing::zn(6);
        assert_eq!(z6.zero_ideal().radical(), z6.zero_ideal());
        assert_eq!(Ideal::new(BaseRing::Z, 0).radical(), Ideal::new(BaseRing::Z, 0));
    }

    #[test]
    fn canonical_generators() {
        let z6 = BaseRing::zn(6);
        assert_eq!(Ideal::new(z6, 4), Ideal::new(z6, 2));
        assert_eq!(Ideal::new(z6, 0).generator(), 6);
        assert!(Ideal::new(z6, 0).is_zero());
        assert!(Ideal::new(z6, 3).is_prime());
        assert!(!Ideal::new(z6, 0).is_prime());
        assert!(BaseRing::zn(5).zero_ideal().is_prime());
        assert!(Ideal::new(BaseRing::Z, 0).is_prime());
        assert_eq!(z6.ideals().unwrap().len(), 4);
    }

    #[test]
    fn containment_order() {
        let z = BaseRing::Z;
        assert!(Ideal::new(z, 4).is_subset(Ideal::new(z, 2)));
        assert!(!Ideal::new(z, 2).is_subset(Ideal::new(z, 4)));
        assert!(Ideal::new(z, 0).is_subset(Ideal::new(z, 7)));
        assert!(!Ideal::new(z, 7).is_subset(Ideal::new(z, 0)));
        let z8 = BaseRing::zn(8);
        assert!(z8.zero_ideal().is_subset(Ideal::new(z8, 4)));
        assert!(z8.is_nilpotent(6));
        assert!(z8.is_unit(3));
    }
}
