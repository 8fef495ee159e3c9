use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::constants::{dirichlet_l_chi4, l_chi4_odd_coefficient, log2, pi, zeta, zeta_even_coefficient};
use super::polylog::{script_l_double, UnitPoint};
use super::store::ConstantStore;
use super::value::{HighPrecisionReal, Precision};
use crate::error::{ensure, Error, Result};
use crate::exact::{format_rational, ExactRational};

/// The constants a closed form may contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstantKind {
    /// `ζ(arg)`, kept only for odd `arg ≥ 3`.
    Zeta,
    /// `L(χ₋₄, arg)`, kept only for even `arg ≥ 2`.
    LChi4,
    Log2,
    /// `i·𝓛_{3,arg}(i,i)`, a real number with no known reduction.
    L3bIi,
    One,
}

impl ConstantKind {
    pub const ALL: [ConstantKind; 5] =
        [ConstantKind::Zeta, ConstantKind::LChi4, ConstantKind::Log2, ConstantKind::L3bIi, ConstantKind::One];

    /// Stable name used in files and JSON.
    pub fn name(self) -> &'static str {
        match self {
            ConstantKind::Zeta => "zeta",
            ConstantKind::LChi4 => "Lchi4",
            ConstantKind::Log2 => "log2",
            ConstantKind::L3bIi => "L3b_ii",
            ConstantKind::One => "one",
        }
    }
}

impl fmt::Display for ConstantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstantKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ConstantKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown constant kind {s:?}")))
    }
}

/// `π^pi_power · c` where `c` is the constant named by `kind` and `arg`.
///
/// Ordering is by kind, then argument, then power of `π`, which gives every
/// [`ZetaCombination`] a unique printed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstantBasisElement {
    pub kind: ConstantKind,
    pub arg: u32,
    pub pi_power: u32,
}

impl ConstantBasisElement {
    /// Validates the argument range for `kind`.
    pub fn new(kind: ConstantKind, arg: u32, pi_power: u32) -> Result<Self> {
        match kind {
            ConstantKind::Zeta => ensure!(arg >= 2, InvalidArgument, "zeta needs arg >= 2, got {arg}"),
            ConstantKind::LChi4 | ConstantKind::L3bIi => {
                ensure!(arg >= 1, InvalidArgument, "{kind} needs arg >= 1, got {arg}")
            }
            ConstantKind::Log2 | ConstantKind::One => {
                ensure!(arg == 0, InvalidArgument, "{kind} takes no argument, got {arg}")
            }
        }
        Ok(ConstantBasisElement { kind, arg, pi_power })
    }

    /// `ζ(s)`. Panics for `s < 2`.
    pub fn zeta(s: u32) -> Self {
        Self::new(ConstantKind::Zeta, s, 0).expect("zeta argument")
    }

    /// `L(χ₋₄, s)`. Panics for `s = 0`.
    pub fn l_chi4(s: u32) -> Self {
        Self::new(ConstantKind::LChi4, s, 0).expect("L argument")
    }

    pub fn log2() -> Self {
        ConstantBasisElement { kind: ConstantKind::Log2, arg: 0, pi_power: 0 }
    }

    /// `i·𝓛_{3,b}(i,i)`. Panics for `b = 0`.
    pub fn l3b_ii(b: u32) -> Self {
        Self::new(ConstantKind::L3bIi, b, 0).expect("L3b argument")
    }

    pub fn one() -> Self {
        ConstantBasisElement { kind: ConstantKind::One, arg: 0, pi_power: 0 }
    }

    /// `π^k`.
    pub fn pi_pow(k: u32) -> Self {
        Self::one().times_pi(k)
    }

    /// Multiplies by `π^k`.
    pub fn times_pi(self, k: u32) -> Self {
        ConstantBasisElement { pi_power: self.pi_power + k, ..self }
    }

    /// The same constant without its power of `π`.
    pub fn base(self) -> Self {
        ConstantBasisElement { pi_power: 0, ..self }
    }

    /// Weight of the constant alone: `ζ(k)` and `L(χ₋₄,k)` weigh `k`,
    /// `log 2` weighs 1, `𝓛_{3,b}` weighs `3+b`, and 1 weighs 0.
    pub fn constant_weight(&self) -> u32 {
        match self.kind {
            ConstantKind::Zeta | ConstantKind::LChi4 => self.arg,
            ConstantKind::Log2 => 1,
            ConstantKind::L3bIi => 3 + self.arg,
            ConstantKind::One => 0,
        }
    }

    /// `pi_power + constant_weight`.
    pub fn weight(&self) -> u32 {
        self.pi_power + self.constant_weight()
    }

    /// Rewrites `ζ(even)` and `L(χ₋₄, odd)` as rational multiples of a
    /// power of `π`; every other element is already canonical.
    fn canonical(self) -> (ExactRational, Self) {
        match self.kind {
            ConstantKind::Zeta if self.arg % 2 == 0 => {
                (zeta_even_coefficient(self.arg / 2), Self::pi_pow(self.pi_power + self.arg))
            }
            ConstantKind::LChi4 if self.arg % 2 == 1 => {
                (l_chi4_odd_coefficient(self.arg / 2), Self::pi_pow(self.pi_power + self.arg))
            }
            _ => (ExactRational::one(), self),
        }
    }
}

impl fmt::Display for ConstantBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi = match self.pi_power {
            0 => String::new(),
            1 => "π".to_string(),
            k => format!("π^{k}"),
        };
        let constant = match self.kind {
            ConstantKind::Zeta => format!("ζ({})", self.arg),
            ConstantKind::LChi4 => format!("L(χ₋₄,{})", self.arg),
            ConstantKind::Log2 => "log 2".to_string(),
            ConstantKind::L3bIi => format!("i𝓛_{{3,{}}}(i,i)", self.arg),
            ConstantKind::One => String::new(),
        };
        match (pi.is_empty(), constant.is_empty()) {
            (true, true) => f.write_str("1"),
            (false, false) => write!(f, "{pi}·{constant}"),
            _ => write!(f, "{pi}{constant}"),
        }
    }
}

/// A finite rational combination of [`ConstantBasisElement`]s in canonical
/// form: even zeta values and odd L-values are folded into powers of `π`,
/// and zero coefficients are never stored. Two combinations are equal
/// exactly when they denote the same formal sum.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ZetaCombination {
    terms: BTreeMap<ConstantBasisElement, ExactRational>,
}

impl ZetaCombination {
    pub fn new() -> Self {
        Self::default()
    }

    /// `coeff · element`.
    pub fn term(coeff: ExactRational, element: ConstantBasisElement) -> Self {
        let mut c = Self::new();
        c.add_term(coeff, element);
        c
    }

    /// Rational multiple of `π^k`.
    pub fn rational_pi(coeff: ExactRational, k: u32) -> Self {
        Self::term(coeff, ConstantBasisElement::pi_pow(k))
    }

    pub fn add_term(&mut self, coeff: ExactRational, element: ConstantBasisElement) {
        if coeff.is_zero() {
            return;
        }
        let (scale, element) = element.canonical();
        let entry = self.terms.entry(element).or_insert_with(ExactRational::zero);
        *entry += coeff * scale;
        if entry.is_zero() {
            self.terms.remove(&element);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&ConstantBasisElement, &ExactRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, element: &ConstantBasisElement) -> ExactRational {
        let (scale, element) = element.canonical();
        self.terms.get(&element).map_or_else(ExactRational::zero, |c| c / scale)
    }

    pub fn scale(&self, q: &ExactRational) -> Self {
        self.iter().fold(Self::new(), |mut acc, (e, c)| {
            acc.add_term(c * q, *e);
            acc
        })
    }

    /// Multiplies by `π^k`.
    pub fn times_pi(&self, k: u32) -> Self {
        self.iter().fold(Self::new(), |mut acc, (e, c)| {
            acc.add_term(c.clone(), e.times_pi(k));
            acc
        })
    }

    /// True when every term is a rational multiple of a power of `π`.
    pub fn is_pi_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.kind == ConstantKind::One)
    }

    /// Product of two combinations, defined when at least one factor is a
    /// polynomial in `π`. Products of two transcendental constants such as
    /// `ζ(3)·ζ(5)` have no place in this basis and are an error.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (poly, general) = if self.is_pi_polynomial() {
            (self, other)
        } else if other.is_pi_polynomial() {
            (other, self)
        } else {
            return Err(Error::InvalidArgument(format!(
                "product ({self}) · ({other}) leaves the constant basis"
            )));
        };
        let mut out = Self::new();
        for (pe, pc) in poly.iter() {
            for (ge, gc) in general.iter() {
                out.add_term(pc * gc, ge.times_pi(pe.pi_power));
            }
        }
        Ok(out)
    }

    /// The set of term weights; a homogeneous combination has one.
    pub fn weights(&self) -> Vec<u32> {
        let mut w: Vec<u32> = self.terms.keys().map(ConstantBasisElement::weight).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    /// The common weight of every term, if there is one.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        match self.weights().as_slice() {
            [w] => Some(*w),
            _ => None,
        }
    }
}

impl Add for &ZetaCombination {
    type Output = ZetaCombination;
    fn add(self, rhs: &ZetaCombination) -> ZetaCombination {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(c.clone(), *e);
        }
        out
    }
}

impl Add for ZetaCombination {
    type Output = ZetaCombination;
    fn add(self, rhs: ZetaCombination) -> ZetaCombination {
        &self + &rhs
    }
}

impl Sub for &ZetaCombination {
    type Output = ZetaCombination;
    fn sub(self, rhs: &ZetaCombination) -> ZetaCombination {
        self + &-rhs.clone()
    }
}

impl Sub for ZetaCombination {
    type Output = ZetaCombination;
    fn sub(self, rhs: ZetaCombination) -> ZetaCombination {
        &self - &rhs
    }
}

impl Neg for ZetaCombination {
    type Output = ZetaCombination;
    fn neg(self) -> ZetaCombination {
        self.scale(&-ExactRational::one())
    }
}

impl std::iter::Sum for ZetaCombination {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::new(), |acc, c| &acc + &c)
    }
}

impl fmt::Display for ZetaCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_unit = e.kind == ConstantKind::One && e.pi_power == 0;
            if magnitude.is_one() && !is_unit {
                write!(f, "{e}")?;
            } else if is_unit {
                f.write_str(&format_rational(&magnitude))?;
            } else {
                write!(f, "{}·{e}", format_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}

/// Numerical value of one basis constant without its `π` factor.
fn base_value(element: ConstantBasisElement, precision: Precision) -> Result<HighPrecisionReal> {
    match element.kind {
        ConstantKind::Zeta => zeta(element.arg, precision),
        ConstantKind::LChi4 => dirichlet_l_chi4(element.arg, precision),
        ConstantKind::Log2 => Ok(log2(precision)),
        ConstantKind::One => Ok(HighPrecisionReal::from_rational(&ExactRational::one(), precision)),
        ConstantKind::L3bIi => {
            let v = script_l_double(3, element.arg, UnitPoint::I, precision)?.times_i();
            let residual = v.im.to_f64().abs();
            let allowed = 100.0 * v.im.error_bound().max(precision.tolerance());
            ensure!(
                residual <= allowed,
                InvalidArgument,
                "i·L_{{3,{}}}(i,i) has imaginary part {residual:e}, above {allowed:e}",
                element.arg
            );
            Ok(v.re)
        }
    }
}

/// `Σ coeff · π^a · constant`, with the error bounds of the terms summed.
///
/// ```
/// use mahler_measure::exact::int;
/// use mahler_measure::special::{combination_value, ConstantBasisElement, Precision, ZetaCombination};
/// let c = ZetaCombination::term(int(7), ConstantBasisElement::zeta(3));
/// let v = combination_value(&c, Precision::new(20).unwrap()).unwrap();
/// assert_eq!(v.to_decimal(10), "8.4143983221");
/// ```
pub fn combination_value(c: &ZetaCombination, precision: Precision) -> Result<HighPrecisionReal> {
    evaluate(c, precision, None)
}

/// Like [`combination_value`], reading and filling `store` for the basis
/// constants.
pub fn combination_value_with(
    c: &ZetaCombination,
    precision: Precision,
    store: &ConstantStore,
) -> Result<HighPrecisionReal> {
    evaluate(c, precision, Some(store))
}

fn evaluate(c: &ZetaCombination, precision: Precision, store: Option<&ConstantStore>) -> Result<HighPrecisionReal> {
    let pi = pi(precision);
    let mut cache: HashMap<ConstantBasisElement, HighPrecisionReal> = HashMap::new();
    let mut total = HighPrecisionReal::zero(precision.bits());
    for (element, coeff) in c.iter() {
        let base = element.base();
        if let Entry::Vacant(slot) = cache.entry(base) {
            let value = match store.and_then(|s| s.lookup(&base, precision)) {
                Some(v) => v,
                None => {
                    let v = base_value(base, precision)?;
                    if let Some(s) = store {
                        s.insert_value(&base, &v)?;
                    }
                    v
                }
            };
            slot.insert(value);
        }
        let term = cache[&base].mul(&pi.pow(element.pi_power)).mul_rational(coeff);
        total = total.add(&term);
    }
    Ok(total)
}
