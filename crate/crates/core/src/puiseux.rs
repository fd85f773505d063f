//! Finite Puiseux sums `Σ c·t^q` over ℚ and Laurent polynomials with such
//! coefficients.
//!
//! Initial forms use the substitution `xᵢ ↦ t^{−wᵢ}xᵢ`: the term `a_ω x^ω`
//! acquires t-order `v(a_ω) − ⟨ω, w⟩`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{self, Int, Rat};
use crate::error::{check_dim, Error, Result};
use crate::subdivision::HeightedConfig;

/// `Σ cᵢ t^{qᵢ}` with nonzero coefficients and strictly increasing exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PuiseuxScalar {
    terms: Vec<(Rat, Rat)>,
}

impl PuiseuxScalar {
    /// Normalizes arbitrary `(coeff, exponent)` pairs: like exponents are
    /// combined and zero coefficients dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rat, Rat)>) -> Self {
        let mut acc: BTreeMap<Rat, Rat> = BTreeMap::new();
        for (c, q) in terms {
            *acc.entry(q).or_insert_with(Rat::zero) += c;
        }
        PuiseuxScalar {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(q, c)| (c, q))
                .collect(),
        }
    }

    pub fn zero() -> Self {
        PuiseuxScalar { terms: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_terms([(c, Rat::zero())])
    }

    /// `t^q`.
    pub fn t_power(q: Rat) -> Self {
        PuiseuxScalar {
            terms: vec![(Rat::one(), q)],
        }
    }

    /// `(coefficient, exponent)` pairs by increasing exponent.
    pub fn terms(&self) -> &[(Rat, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least exponent, or `None` (standing for +∞) for zero.
    pub fn valuation(&self) -> Option<&Rat> {
        self.terms.first().map(|(_, q)| q)
    }

    pub fn leading_term(&self) -> Result<&Rat> {
        self.terms.first().map(|(c, _)| c).ok_or(Error::ZeroScalar)
    }

    /// Least `M` with every exponent in `(1/M)ℤ`.
    pub fn common_denominator(&self) -> Int {
        self.terms
            .iter()
            .fold(Int::one(), |m, (_, q)| m.lcm(q.denom()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, q)| q.is_zero())
    }
}

impl Add for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn add(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        PuiseuxScalar::from_terms(self.terms.iter().chain(&rhs.terms).cloned())
    }
}

impl Sub for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn sub(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        self + &(-rhs)
    }
}

impl Neg for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn neg(self) -> PuiseuxScalar {
        PuiseuxScalar {
            terms: self.terms.iter().map(|(c, q)| (-c, q.clone())).collect(),
        }
    }
}

impl Mul for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn mul(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                out.push((a * b, p + q));
            }
        }
        PuiseuxScalar::from_terms(out)
    }
}

impl fmt::Debug for PuiseuxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PuiseuxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, q)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if q.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*t^({q})")?;
            }
        }
        Ok(())
    }
}

/// `Σ a_ω x^ω` over exponent vectors `ω ∈ ℤⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<i64>, PuiseuxScalar>,
}

impl LaurentPoly {
    /// Repeated exponents are summed; zero coefficients dropped.
    pub fn new(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, PuiseuxScalar)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<Vec<i64>, PuiseuxScalar> = BTreeMap::new();
        for (e, c) in terms {
            check_dim(num_vars, e.len())?;
            let sum = match acc.get(&e) {
                Some(prev) => prev + &c,
                None => c,
            };
            acc.insert(e, sum);
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { num_vars, terms: acc })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, PuiseuxScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn support(&self) -> Vec<&Vec<i64>> {
        self.terms.keys().collect()
    }

    pub fn coeff(&self, e: &[i64]) -> Option<&PuiseuxScalar> {
        self.terms.get(e)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (k, x) in e.iter().enumerate() {
                if *x != 0 {
                    write!(f, "*x{}^{}", k + 1, x)?;
                }
            }
        }
        Ok(())
    }
}

/// t-order of the term with exponent `e` after `xᵢ ↦ t^{−wᵢ}xᵢ`.
fn order(e: &[i64], c: &PuiseuxScalar, w: &[Rat]) -> Rat {
    let ew: Rat = e.iter().zip(w).map(|(&x, wi)| wi * arith::rat(x)).sum();
    c.valuation().expect("nonzero coefficient") - ew
}

/// Terms of least order, with their leading coefficients.
pub fn init_form(f: &LaurentPoly, w: &[Rat]) -> Result<LaurentPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_dim(f.num_vars, w.len())?;
    let orders: Vec<Rat> = f.terms.iter().map(|(e, c)| order(e, c, w)).collect();
    let m = orders.iter().min().expect("nonzero polynomial");
    let terms = f
        .terms
        .iter()
        .zip(&orders)
        .filter(|(_, o)| *o == m)
        .map(|((e, c), _)| {
            let lead = c.leading_term().expect("nonzero coefficient").clone();
            (e.clone(), PuiseuxScalar::constant(lead))
        });
    LaurentPoly::new(f.num_vars, terms)
}

/// Support of `f` with heights `v(a_ω)`, in exponent order.
pub fn newton_data(f: &LaurentPoly) -> Result<HeightedConfig> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (points, heights) = f
        .terms
        .iter()
        .map(|(e, c)| (e.clone(), c.valuation().expect("nonzero").clone()))
        .unzip();
    HeightedConfig::new(f.num_vars, points, heights)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::arith::{qvec, rat, ratio};
    use crate::subdivision::pl_min;

    fn s(terms: &[(i64, i64, i64)]) -> PuiseuxScalar {
        // (coeff, exponent numerator, exponent denominator)
        PuiseuxScalar::from_terms(terms.iter().map(|&(c, p, q)| (rat(c), ratio(p, q))))
    }

    fn poly(n: usize, terms: &[(&[i64], PuiseuxScalar)]) -> LaurentPoly {
        LaurentPoly::new(n, terms.iter().map(|(e, c)| (e.to_vec(), c.clone()))).unwrap()
    }

    fn k(c: i64) -> PuiseuxScalar {
        PuiseuxScalar::constant(rat(c))
    }

    #[test]
    fn scalar_arithmetic() {
        let a = PuiseuxScalar::t_power(ratio(1, 2));
        let b = PuiseuxScalar::t_power(ratio(1, 3));
        assert_eq!(&a * &b, PuiseuxScalar::t_power(ratio(5, 6)));
        let one_plus_t = s(&[(1, 0, 1), (1, 1, 1)]);
        assert_eq!(&one_plus_t + &k(-1), PuiseuxScalar::t_power(rat(1)));
        let one_minus_t = s(&[(1, 0, 1), (-1, 1, 1)]);
        assert_eq!(&one_plus_t * &one_minus_t, s(&[(1, 0, 1), (-1, 2, 1)]));
        assert_eq!(s(&[(1, 1, 2), (2, 1, 3)]).common_denominator(), Int::from(6));
    }

    #[test]
    fn valuations_and_leading_terms() {
        let x = s(&[(3, 2, 1), (1, 5, 1)]);
        assert_eq!(x.valuation(), Some(&rat(2)));
        assert_eq!(x.leading_term().unwrap(), &rat(3));
        assert_eq!(k(7).valuation(), Some(&rat(0)));
        assert_eq!(PuiseuxScalar::zero().valuation(), None);
        assert_eq!(PuiseuxScalar::zero().leading_term(), Err(Error::ZeroScalar));
        assert_eq!(s(&[(-1, 1, 2)]).leading_term().unwrap(), &rat(-1));
        assert_eq!(k(5).leading_term().unwrap(), &rat(5));
    }

    #[test]
    fn worked_initial_form() {
        let f = poly(3, &[(&[2, 1, 0], k(1)), (&[1, 1, 1], k(7)), (&[0, 0, 3], k(4))]);
        let g = init_form(&f, &qvec(&[3, 4, 0])).unwrap();
        assert_eq!(g, poly(3, &[(&[2, 1, 0], k(1))]));
        // Orders −10, −7, 0 as in t^{−10}(x₁²x₂ + 7t³x₁x₂x₃ + 4t^{10}x₃³).
        let w = qvec(&[3, 4, 0]);
        let orders: Vec<Rat> = f.terms().iter().map(|(e, c)| order(e, c, &w)).collect();
        assert_eq!(orders, vec![rat(0), rat(-7), rat(-10)]);
    }

    #[test]
    fn simple_initial_forms() {
        let xy = poly(2, &[(&[1, 0], k(1)), (&[0, 1], k(1))]);
        assert_eq!(init_form(&xy, &qvec(&[0, 0])).unwrap(), xy);
        let xty = poly(2, &[(&[1, 0], k(1)), (&[0, 1], PuiseuxScalar::t_power(rat(1)))]);
        assert_eq!(
            init_form(&xty, &qvec(&[0, 0])).unwrap(),
            poly(2, &[(&[1, 0], k(1))])
        );
        assert_eq!(
            init_form(&LaurentPoly::new(2, []).unwrap(), &qvec(&[0, 0])),
            Err(Error::ZeroPolynomial)
        );
        assert!(matches!(
            init_form(&xy, &qvec(&[0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn newton_data_examples() {
        let f = poly(
            2,
            &[
                (&[1, 0], k(1)),
                (&[0, 1], k(1)),
                (&[0, 0], PuiseuxScalar::t_power(rat(1))),
            ],
        );
        let cfg = newton_data(&f).unwrap();
        assert_eq!(cfg.points(), &[vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(cfg.heights(), &[rat(1), rat(0), rat(0)]);
        let g = poly(3, &[(&[2, 1, 0], k(1)), (&[1, 1, 1], k(7)), (&[0, 0, 3], k(4))]);
        let cfg = newton_data(&g).unwrap();
        assert_eq!(cfg.points(), &[vec![0, 0, 3], vec![1, 1, 1], vec![2, 1, 0]]);
        assert!(cfg.heights().iter().all(Zero::is_zero));
    }

    fn scalar() -> impl Strategy<Value = PuiseuxScalar> {
        prop::collection::vec((-5i64..=5, -6i64..=6, 1i64..=6), 0..4).prop_map(|ts| {
            PuiseuxScalar::from_terms(ts.into_iter().map(|(c, p, q)| (rat(c), ratio(p, q))))
        })
    }

    fn laurent(n: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(
            (prop::collection::vec(-2i64..=2, n), scalar()),
            1..7,
        )
        .prop_map(move |ts| LaurentPoly::new(n, ts).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn valuation_laws(x in scalar(), y in scalar()) {
            let prod = &x * &y;
            match (x.valuation(), y.valuation()) {
                (Some(a), Some(b)) => prop_assert_eq!(prod.valuation(), Some(&(a + b))),
                _ => prop_assert!(prod.is_zero()),
            }
            let sum = &x + &y;
            if let (Some(a), Some(b)) = (x.valuation(), y.valuation()) {
                let m = a.min(b);
                if !sum.is_zero() {
                    prop_assert!(sum.valuation().unwrap() >= m);
                }
                if a != b {
                    prop_assert_eq!(sum.valuation(), Some(m));
                }
            }
            prop_assert!((&x - &x).is_zero());
        }

        #[test]
        fn initial_form_laws(
            f in prop_oneof![laurent(2), laurent(3)],
            w in prop::collection::vec((-4i64..=4, 1i64..=3), 3),
        ) {
            prop_assume!(!f.is_zero());
            let w: Vec<Rat> = w[..f.num_vars()].iter().map(|&(p, q)| ratio(p, q)).collect();
            let g = init_form(&f, &w).unwrap();
            let zero = vec![rat(0); f.num_vars()];
            prop_assert_eq!(&init_form(&g, &zero).unwrap(), &g);
            for (e, c) in g.terms() {
                let orig = f.coeff(e);
                prop_assert!(orig.is_some());
                prop_assert_eq!(
                    c,
                    &PuiseuxScalar::constant(orig.unwrap().leading_term().unwrap().clone())
                );
            }
            // Bridge to the piecewise-linear minimum at u = −w.
            let cfg = newton_data(&f).unwrap();
            let u: Vec<Rat> = w.iter().map(|x| -x).collect();
            let (_, arg) = pl_min(&cfg, &u).unwrap();
            let from_pl: Vec<&Vec<i64>> = arg.iter().map(|&i| &cfg.points()[i]).collect();
            prop_assert_eq!(g.support(), from_pl);
        }
    }
}
