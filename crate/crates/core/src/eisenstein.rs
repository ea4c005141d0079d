//! Eisenstein integers a + b*w where w is a primitive cube root of
//! unity, so w^2 = -1 - w. Exact, no floating point.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

impl Eisenstein {
    pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };
    pub const ONE: Eisenstein = Eisenstein { a: 1, b: 0 };
    pub const OMEGA: Eisenstein = Eisenstein { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Eisenstein { a: n, b: 0 }
    }

    /// w^k, reduced by w^3 = 1.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Eisenstein::ONE,
            1 => Eisenstein::OMEGA,
            _ => Eisenstein { a: -1, b: -1 },
        }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_integer(self) -> bool {
        self.b == 0
    }

    /// Complex conjugate: w bar = w^2 = -1 - w.
    pub fn conj(self) -> Self {
        Eisenstein {
            a: self.a - self.b,
            b: -self.b,
        }
    }

    /// Multiplicative norm a^2 - ab + b^2.
    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: Eisenstein) -> Eisenstein {
        Eisenstein {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: Eisenstein) -> Eisenstein {
        Eisenstein {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: Eisenstein) -> Eisenstein {
        // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
        Eisenstein {
            a: self.a * rhs.a - self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a - self.b * rhs.b,
        }
    }
}

impl Mul<Eisenstein> for i64 {
    type Output = Eisenstein;
    fn mul(self, rhs: Eisenstein) -> Eisenstein {
        Eisenstein {
            a: self * rhs.a,
            b: self * rhs.b,
        }
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "w"),
            (0, -1) => write!(f, "-w"),
            (0, b) => write!(f, "{b}w"),
            (a, 1) => write!(f, "{a}+w"),
            (a, -1) => write!(f, "{a}-w"),
            (a, b) if b > 0 => write!(f, "{a}+{b}w"),
            (a, b) => write!(f, "{a}{b}w"),
        }
    }
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Eisenstein({self})")
    }
}
