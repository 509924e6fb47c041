use std::fmt;

use num_traits::Signed;
use serde::{Serialize, Serializer};

use super::{LaurentPoly, Rational};

/// A center of symmetry `c ∈ ½ℤ`, stored as `2c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Center {
    twice: i64,
}

impl Center {
    pub fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    pub fn whole(c: i64) -> Self {
        Self { twice: 2 * c }
    }

    /// The center `num / 2`.
    pub fn half(num: i64) -> Self {
        Self { twice: num }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Serialize for Center {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Palindromicity about `center` and unimodality of a Laurent polynomial.
///
/// Unimodal here includes nonnegativity of every coefficient. The zero
/// polynomial is palindromic about every center and unimodal.
pub fn palindrome_unimodal(p: &LaurentPoly, center: Center) -> (bool, bool) {
    (is_palindromic(p, center), is_unimodal(p))
}

pub fn is_palindromic(p: &LaurentPoly, center: Center) -> bool {
    p.terms().all(|(e, c)| p.coeff(center.twice - e) == *c)
}

pub fn is_unimodal(p: &LaurentPoly) -> bool {
    let (Some(lo), Some(hi)) = (p.valuation(), p.degree()) else {
        return true;
    };
    let dense: Vec<Rational> = (lo..=hi).map(|e| p.coeff(e)).collect();
    if dense.iter().any(|c| c.is_negative()) {
        return false;
    }
    let mut falling = false;
    for w in dense.windows(2) {
        if w[1] > w[0] {
            if falling {
                return false;
            }
        } else if w[1] < w[0] {
            falling = true;
        }
    }
    true
}

/// Center of a nonzero palindromic polynomial, `(val + deg)/2`.
pub fn natural_center(p: &LaurentPoly) -> Option<Center> {
    Some(Center::from_twice(p.valuation()? + p.degree()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_quantum_integers() {
        let p = LaurentPoly::from_ints(0, &[1, 2, 2, 1]);
        assert_eq!(palindrome_unimodal(&p, Center::half(3)), (true, true));
        assert_eq!(palindrome_unimodal(&p, Center::whole(1)), (false, true));
    }

    #[test]
    fn gap_breaks_unimodality() {
        for m in 1..6 {
            // t^{m-1}(1 + t^2)
            let p = LaurentPoly::from_ints(m - 1, &[1, 0, 1]);
            assert_eq!(palindrome_unimodal(&p, Center::whole(m)), (true, false));
        }
    }

    #[test]
    fn zero_has_every_center() {
        for twice in -3..7 {
            assert_eq!(
                palindrome_unimodal(&LaurentPoly::zero(), Center::from_twice(twice)),
                (true, true)
            );
        }
    }

    #[test]
    fn negative_coefficients_are_not_unimodal() {
        let p = LaurentPoly::from_ints(0, &[-1, -2, -1]);
        assert_eq!(palindrome_unimodal(&p, Center::whole(1)), (true, false));
    }

    #[test]
    fn center_display() {
        assert_eq!(Center::half(3).to_string(), "3/2");
        assert_eq!(Center::whole(2).to_string(), "2");
    }
}
