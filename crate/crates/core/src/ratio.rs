//! Minimal exact rationals on `i128`, enough for alcove barycenters, linear
//! solves and Lagrange interpolation. Values stay tiny here; overflow would
//! be a logic bug, so arithmetic panics on it (debug and release alike).

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i128,
    den: i128, // always > 0, gcd(num, den) == 1
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rat {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn from_int(n: i64) -> Rat {
        Rat { num: n as i128, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn as_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    pub fn is_nonneg(&self) -> bool {
        self.num >= 0
    }

    pub fn add(self, o: Rat) -> Rat {
        Rat::new(
            self.num.checked_mul(o.den).unwrap() + o.num.checked_mul(self.den).unwrap(),
            self.den.checked_mul(o.den).unwrap(),
        )
    }

    pub fn sub(self, o: Rat) -> Rat {
        self.add(o.neg())
    }

    pub fn neg(self) -> Rat {
        Rat { num: -self.num, den: self.den }
    }

    pub fn mul(self, o: Rat) -> Rat {
        Rat::new(
            self.num.checked_mul(o.num).unwrap(),
            self.den.checked_mul(o.den).unwrap(),
        )
    }

    pub fn div(self, o: Rat) -> Rat {
        assert!(o.num != 0, "division by zero");
        Rat::new(
            self.num.checked_mul(o.den).unwrap(),
            self.den.checked_mul(o.num).unwrap(),
        )
    }

    pub fn signum(&self) -> i32 {
        self.num.signum() as i32
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(-2, 4);
        assert_eq!(a.add(b), Rat::ZERO);
        assert_eq!(a.mul(Rat::from_int(4)), Rat::from_int(2));
        assert_eq!(Rat::new(6, -4), Rat::new(-3, 2));
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert_eq!(Rat::new(7, 1).as_integer(), Some(7));
        assert_eq!(Rat::new(7, 2).as_integer(), None);
    }
}
