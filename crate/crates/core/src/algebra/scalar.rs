//! Exact scalars in a tower of quadratic extensions over `ℚ(i)`.
//!
//! A [`Field`] is a chain `ℚ(i) ⊂ K₁ ⊂ K₂` where each step adjoins `√d` for
//! a radicand `d` of the level below; depth is capped at two. A [`Scalar`]
//! always lives in the smallest field of its chain: an element `x + y·√d`
//! with `y = 0` collapses to `x`. Within one chain this makes representations
//! unique, so structural comparison is exact equality.
//!
//! Scalars from unrelated chains are combined by joining their fields
//! (adjoining the missing radicals to the deeper chain) and embedding both
//! operands. Joining fails with [`AlgebraError::TowerDepthExceeded`] when the
//! result would need a third level; the arithmetic operators panic in that
//! case, so callers that may mix many radicals should use [`Scalar::unify`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use super::gaussian::{Gaussian, Rational};
use super::AlgebraError;

pub const MAX_TOWER_DEPTH: u8 = 2;

/// One quadratic step `parent(√radicand)`.
#[derive(Debug)]
pub struct Extension {
    parent: Field,
    radicand: Scalar,
    level: u8,
}

impl Extension {
    fn new(parent: Field, radicand: Scalar) -> Result<Arc<Extension>, AlgebraError> {
        if radicand.is_zero() {
            return Err(AlgebraError::ZeroRadicand);
        }
        let level = parent.level() + 1;
        if level > MAX_TOWER_DEPTH {
            return Err(AlgebraError::TowerDepthExceeded);
        }
        Ok(Arc::new(Extension { parent, radicand, level }))
    }

    pub fn parent(&self) -> &Field {
        &self.parent
    }

    pub fn radicand(&self) -> &Scalar {
        &self.radicand
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    fn same(a: &Arc<Extension>, b: &Arc<Extension>) -> bool {
        Arc::ptr_eq(a, b)
            || (a.level == b.level
                && a.parent.same(&b.parent)
                && a.radicand.structural_eq(&b.radicand))
    }
}

/// A field in the tower; `Field::base()` is `ℚ(i)`.
#[derive(Clone, Debug, Default)]
pub struct Field(Option<Arc<Extension>>);

impl Field {
    pub fn base() -> Field {
        Field(None)
    }

    pub fn level(&self) -> u8 {
        self.0.as_ref().map_or(0, |e| e.level)
    }

    pub fn top(&self) -> Option<&Arc<Extension>> {
        self.0.as_ref()
    }

    /// Extensions of the chain, bottom first.
    pub fn chain(&self) -> Vec<Arc<Extension>> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        while let Some(e) = cur {
            cur = e.parent.0.clone();
            out.push(e);
        }
        out.reverse();
        out
    }

    /// Structural identity of the two chains.
    pub fn same(&self, other: &Field) -> bool {
        match (&self.0, &other.0) {
            (None, None) => true,
            (Some(a), Some(b)) => Extension::same(a, b),
            _ => false,
        }
    }

    /// True when `sub` is this field or one of its subfields in the chain.
    pub fn contains(&self, sub: &Field) -> bool {
        let Some(target) = &sub.0 else { return true };
        let mut cur = self.0.as_ref();
        while let Some(e) = cur {
            if e.level < target.level {
                return false;
            }
            if Extension::same(e, target) {
                return true;
            }
            cur = e.parent.0.as_ref();
        }
        false
    }

    /// Adjoins `√d` to this field. `d` must not already be a square here.
    pub fn adjoin_sqrt(&self, d: &Scalar) -> Result<Field, AlgebraError> {
        let d = d.embed(self)?;
        if d.is_zero() {
            return Err(AlgebraError::ZeroRadicand);
        }
        if sqrt_in(&d, self).is_some() {
            return Err(AlgebraError::NotProperExtension);
        }
        Ok(Field(Some(Extension::new(self.clone(), d)?)))
    }

    /// Smallest field (up to the order of adjunction) containing both.
    pub fn join(&self, other: &Field) -> Result<Field, AlgebraError> {
        if self.contains(other) {
            return Ok(self.clone());
        }
        if other.contains(self) {
            return Ok(other.clone());
        }
        let (mut acc, rest) = if self.level() >= other.level() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for ext in rest.chain() {
            if acc.contains(&Field(Some(ext.clone()))) {
                continue;
            }
            let d = ext.radicand.embed(&acc)?;
            if sqrt_in(&d, &acc).is_some() {
                continue;
            }
            acc = Field(Some(Extension::new(acc, d)?));
        }
        Ok(acc)
    }
}

#[derive(Debug)]
pub struct ExtElem {
    ext: Arc<Extension>,
    x: Scalar,
    y: Scalar,
}

/// Exact number `x + y·√d` in the extension tower.
#[derive(Clone, Debug)]
pub enum Scalar {
    Base(Gaussian),
    Ext(Arc<ExtElem>),
}

/// Result of [`Scalar::exact_sqrt`].
#[derive(Clone, Debug)]
pub struct SqrtOutcome {
    pub root: Scalar,
    /// The field adjoined to hold the root, if one was needed.
    pub adjoined: Option<Field>,
}

impl SqrtOutcome {
    pub fn extended(&self) -> bool {
        self.adjoined.is_some()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Base(Gaussian::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Base(Gaussian::one())
    }

    pub fn i() -> Scalar {
        Scalar::Base(Gaussian::i())
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::Base(Gaussian::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        Scalar::Base(Gaussian::from_ratio(n, d))
    }

    pub fn gaussian(re: (i64, i64), im: (i64, i64)) -> Scalar {
        Scalar::Base(Gaussian::from_parts(re, im))
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar::Base(Gaussian::from(r))
    }

    /// `x + y·√d` in the given extension; collapses when `y = 0`.
    fn make(ext: &Arc<Extension>, x: Scalar, y: Scalar) -> Scalar {
        if y.is_zero() {
            x
        } else {
            Scalar::Ext(Arc::new(ExtElem { ext: ext.clone(), x, y }))
        }
    }

    /// Builds `x + y·√d` where `field` is `parent(√d)`; `x`, `y` must lie in the parent.
    pub fn from_components(field: &Field, x: Scalar, y: Scalar) -> Result<Scalar, AlgebraError> {
        let top = field.top().ok_or(AlgebraError::NotProperExtension)?;
        let x = x.embed(&top.parent)?;
        let y = y.embed(&top.parent)?;
        Ok(Scalar::make(top, x, y))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Base(_) => Field::base(),
            Scalar::Ext(e) => Field(Some(e.ext.clone())),
        }
    }

    pub fn level(&self) -> u8 {
        match self {
            Scalar::Base(_) => 0,
            Scalar::Ext(e) => e.ext.level,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Base(g) => g.is_zero(),
            Scalar::Ext(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Base(g) if g.is_one())
    }

    pub fn as_gaussian(&self) -> Option<&Gaussian> {
        match self {
            Scalar::Base(g) => Some(g),
            Scalar::Ext(_) => None,
        }
    }

    /// `(x, y)` with `self = x + y·√d` relative to `ext`, for `self` in ext's chain.
    fn components(&self, ext: &Arc<Extension>) -> (Scalar, Scalar) {
        match self {
            Scalar::Ext(e) if Extension::same(&e.ext, ext) => (e.x.clone(), e.y.clone()),
            _ => (self.clone(), Scalar::zero()),
        }
    }

    /// Decomposition `(x, y, d)` of the top level, or `None` for base scalars.
    pub fn parts(&self) -> Option<(&Scalar, &Scalar, &Scalar)> {
        match self {
            Scalar::Base(_) => None,
            Scalar::Ext(e) => Some((&e.x, &e.y, &e.ext.radicand)),
        }
    }

    pub fn structural_eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Base(a), Scalar::Base(b)) => a == b,
            (Scalar::Ext(a), Scalar::Ext(b)) => {
                Arc::ptr_eq(a, b)
                    || (Extension::same(&a.ext, &b.ext)
                        && a.x.structural_eq(&b.x)
                        && a.y.structural_eq(&b.y))
            }
            _ => false,
        }
    }

    /// Image of `self` in `target`, which must contain a root of every radicand of `self`.
    pub fn embed(&self, target: &Field) -> Result<Scalar, AlgebraError> {
        if target.contains(&self.field()) {
            return Ok(self.clone());
        }
        match self {
            Scalar::Base(_) => Ok(self.clone()),
            Scalar::Ext(e) => {
                let x = e.x.embed(target)?;
                let y = e.y.embed(target)?;
                let d = e.ext.radicand.embed(target)?;
                let r = sqrt_in(&d, target).ok_or(AlgebraError::IncompatibleTowers)?;
                Ok(add_same(&x, &mul_same(&y, &r)))
            }
        }
    }

    /// Brings two scalars into a common field.
    pub fn unify(a: &Scalar, b: &Scalar) -> Result<(Scalar, Scalar), AlgebraError> {
        let fa = a.field();
        let fb = b.field();
        if fa.contains(&fb) || fb.contains(&fa) {
            return Ok((a.clone(), b.clone()));
        }
        let f = fa.join(&fb)?;
        Ok((a.embed(&f)?, b.embed(&f)?))
    }

    fn unified(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        Scalar::unify(a, b).unwrap_or_else(|e| panic!("cannot combine scalars {a} and {b}: {e}"))
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar, AlgebraError> {
        let (a, b) = Scalar::unify(self, o)?;
        Ok(add_same(&a, &b))
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar, AlgebraError> {
        let (a, b) = Scalar::unify(self, o)?;
        Ok(mul_same(&a, &b))
    }

    pub fn inv(&self) -> Option<Scalar> {
        inv_same(self)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = mul_same(&acc, self);
        }
        acc
    }

    pub fn conj_radical(&self) -> Scalar {
        match self {
            Scalar::Base(_) => self.clone(),
            Scalar::Ext(e) => Scalar::make(&e.ext, e.x.clone(), -&e.y),
        }
    }

    /// Lexicographic sign: the sign of the first nonzero base component,
    /// reading `x` before `y` at every level, and `re` before `im`.
    pub fn sign(&self) -> Ordering {
        match self {
            Scalar::Base(g) => g.sign(),
            Scalar::Ext(e) => {
                if e.x.is_zero() {
                    e.y.sign()
                } else {
                    e.x.sign()
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// `self` or `-self`, whichever has positive sign.
    pub fn principal(self) -> Scalar {
        if self.sign() == Ordering::Less {
            -&self
        } else {
            self
        }
    }

    /// Square root within the current field only.
    pub fn sqrt_in_field(&self, field: &Field) -> Result<Option<Scalar>, AlgebraError> {
        let u = self.embed(field)?;
        Ok(sqrt_in(&u, field))
    }

    /// Exact square root `r` with `r² = self`.
    ///
    /// When `self` is a square in its own field the principal root is returned
    /// and nothing is adjoined; otherwise `√self` is adjoined as a new level and
    /// the adjoined symbol is the root.
    pub fn exact_sqrt(&self) -> Result<SqrtOutcome, AlgebraError> {
        let f = self.field();
        if let Some(root) = sqrt_in(self, &f) {
            return Ok(SqrtOutcome { root, adjoined: None });
        }
        let ext = Extension::new(f, self.clone())?;
        let root = Scalar::make(&ext, Scalar::zero(), Scalar::one());
        Ok(SqrtOutcome { root, adjoined: Some(Field(Some(ext))) })
    }
}

fn higher(a: &Scalar, b: &Scalar) -> Option<Arc<Extension>> {
    let pick = if a.level() >= b.level() { a } else { b };
    match pick {
        Scalar::Base(_) => None,
        Scalar::Ext(e) => Some(e.ext.clone()),
    }
}

fn add_same(a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Base(x), Scalar::Base(y)) => Scalar::Base(x + y),
        _ => {
            let top = higher(a, b).expect("extension operand");
            let (ax, ay) = a.components(&top);
            let (bx, by) = b.components(&top);
            Scalar::make(&top, add_same(&ax, &bx), add_same(&ay, &by))
        }
    }
}

fn neg_scalar(a: &Scalar) -> Scalar {
    match a {
        Scalar::Base(g) => Scalar::Base(-g),
        Scalar::Ext(e) => Scalar::make(&e.ext, neg_scalar(&e.x), neg_scalar(&e.y)),
    }
}

fn mul_same(a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Base(x), Scalar::Base(y)) => Scalar::Base(x * y),
        _ => {
            if a.is_zero() || b.is_zero() {
                return Scalar::zero();
            }
            let top = higher(a, b).expect("extension operand");
            let (ax, ay) = a.components(&top);
            let (bx, by) = b.components(&top);
            let d = &top.radicand;
            let x = add_same(&mul_same(&ax, &bx), &mul_same(&mul_same(&ay, &by), d));
            let y = add_same(&mul_same(&ax, &by), &mul_same(&ay, &bx));
            Scalar::make(&top, x, y)
        }
    }
}

fn inv_same(a: &Scalar) -> Option<Scalar> {
    match a {
        Scalar::Base(g) => g.inv().map(Scalar::Base),
        Scalar::Ext(e) => {
            // (x + y√d)⁻¹ = (x - y√d) / (x² - y²d)
            let norm = add_same(
                &mul_same(&e.x, &e.x),
                &neg_scalar(&mul_same(&mul_same(&e.y, &e.y), &e.ext.radicand)),
            );
            let ninv = inv_same(&norm)?;
            Some(Scalar::make(
                &e.ext,
                mul_same(&e.x, &ninv),
                neg_scalar(&mul_same(&e.y, &ninv)),
            ))
        }
    }
}

/// Principal square root of `u` inside `field` (u must lie in field's chain).
fn sqrt_in(u: &Scalar, field: &Field) -> Option<Scalar> {
    if u.is_zero() {
        return Some(Scalar::zero());
    }
    let Some(top) = field.top() else {
        return match u {
            Scalar::Base(g) => g.sqrt().map(Scalar::Base),
            Scalar::Ext(_) => None,
        };
    };
    let sub = &top.parent;
    let d = &top.radicand;
    let (x, y) = u.components(top);
    if y.is_zero() {
        if let Some(r) = sqrt_in(&x, sub) {
            return Some(r.principal());
        }
        // x = t²·d gives the root t·√d
        let t2 = mul_same(&x, &inv_same(d)?);
        let t = sqrt_in(&t2, sub)?;
        return Some(Scalar::make(top, Scalar::zero(), t).principal());
    }
    // (p + q√d)² = x + y√d  ⇔  p² ∈ {(x ± n)/2} with n² = x² - y²d, q = y/(2p)
    let n2 = add_same(&mul_same(&x, &x), &neg_scalar(&mul_same(&mul_same(&y, &y), d)));
    let n = sqrt_in(&n2, sub)?;
    let half = Scalar::ratio(1, 2);
    for cand in [add_same(&x, &n), add_same(&x, &neg_scalar(&n))] {
        let p2 = mul_same(&cand, &half);
        if let Some(p) = sqrt_in(&p2, sub) {
            if p.is_zero() {
                continue;
            }
            let q = mul_same(&y, &inv_same(&mul_same(&Scalar::int(2), &p))?);
            return Some(Scalar::make(top, p, q).principal());
        }
    }
    None
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        let (a, b) = Scalar::unified(self, other);
        a.structural_eq(&b)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Gaussian> for Scalar {
    fn from(g: Gaussian) -> Self {
        Scalar::Base(g)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if let (Scalar::Base(x), Scalar::Base(y)) = (self, o) {
            return Scalar::Base(x + y);
        }
        let (a, b) = Scalar::unified(self, o);
        add_same(&a, &b)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if let (Scalar::Base(x), Scalar::Base(y)) = (self, o) {
            return Scalar::Base(x * y);
        }
        let (a, b) = Scalar::unified(self, o);
        mul_same(&a, &b)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        let inv = o.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_scalar(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_scalar(&self)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { (&self).$m(&o) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar { (&self).$m(o) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Base(g) => write!(f, "{g}"),
            Scalar::Ext(e) => {
                if e.x.is_zero() {
                    write!(f, "({})*sqrt({})", e.y, e.ext.radicand)
                } else {
                    write!(f, "({})+({})*sqrt({})", e.x, e.y, e.ext.radicand)
                }
            }
        }
    }
}
