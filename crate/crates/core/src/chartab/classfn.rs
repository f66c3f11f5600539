//! Class functions and their algebra.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{FiniteGroup, Subgroup};

/// Values on the conjugacy classes of one group, in canonical class order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    group: String,
    values: Vec<Cyclotomic>,
}

fn group_key(g: &FiniteGroup) -> String {
    g.content_hash()[..16].to_string()
}

impl ClassFunction {
    pub fn new(g: &FiniteGroup, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), g.num_classes(), "one value per class");
        ClassFunction { group: group_key(g), values }
    }

    pub fn from_ints(g: &FiniteGroup, values: &[i64]) -> Self {
        Self::new(g, values.iter().map(|&v| Cyclotomic::from_int(v)).collect())
    }

    pub fn from_fn(g: &FiniteGroup, f: impl Fn(usize) -> Cyclotomic) -> Self {
        Self::new(g, (0..g.num_classes()).map(f).collect())
    }

    pub fn zero(g: &FiniteGroup) -> Self {
        Self::from_fn(g, |_| Cyclotomic::zero())
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_fn(g, |_| Cyclotomic::one())
    }

    pub fn regular(g: &FiniteGroup) -> Self {
        let order = g.order() as i64;
        Self::from_fn(g, |k| Cyclotomic::from_int(if k == 0 { order } else { 0 }))
    }

    pub fn belongs_to(&self, g: &FiniteGroup) -> bool {
        self.group == group_key(g)
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, k: usize) -> &Cyclotomic {
        &self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Integer values, when every value is a rational integer.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.values.iter().map(|v| v.to_i64()).collect()
    }

    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(f).collect() }
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    pub fn galois(&self, r: i64) -> Self {
        self.map(|v| v.galois(r))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        self.map(|v| v.scale(r))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.map(|v| v.scale_int(k))
    }

    fn zip(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Self {
        assert_eq!(self.group, other.group, "class functions of different groups");
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(self + other)
    }

    /// Pointwise product (tensor product of characters).
    pub fn tensor(&self, other: &Self) -> Self {
        self * other
    }

    /// Standard inner product `(1/|G|) Σ α(g) conj(β(g))`.
    pub fn inner(&self, other: &Self, g: &FiniteGroup) -> Cyclotomic {
        self.inner_on(other, g, None)
    }

    pub fn checked_inner(&self, other: &Self, g: &FiniteGroup, restrict: Option<&[usize]>) -> Result<Cyclotomic> {
        if self.group != other.group || !self.belongs_to(g) {
            return Err(Error::GroupMismatch);
        }
        Ok(self.inner_on(other, g, restrict))
    }

    /// Inner product with the sum running only over the given classes.
    pub fn inner_on(&self, other: &Self, g: &FiniteGroup, classes: Option<&[usize]>) -> Cyclotomic {
        assert_eq!(self.group, other.group, "class functions of different groups");
        let cl = g.classes();
        let all: Vec<usize>;
        let ks = match classes {
            Some(ks) => ks,
            None => {
                all = (0..cl.len()).collect();
                &all
            }
        };
        let mut acc = Cyclotomic::zero();
        for &k in ks {
            let a = &self.values[k];
            let b = &other.values[k];
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let term = if b.is_rational() { a.clone() * b } else { a * &b.conj() };
            acc += &term.scale_int(cl.size(k) as i64);
        }
        acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(g.order())))
    }

    /// Exact integer inner product, or an error naming the offending value.
    pub fn inner_int(&self, other: &Self, g: &FiniteGroup) -> Result<i64> {
        let v = self.inner(other, g);
        v.to_i64().ok_or_else(|| Error::Internal(format!("inner product {v} is not an integer")))
    }

    /// Adams operation `χ^(n)(g) = χ(g^n)`.
    pub fn adams(&self, g: &FiniteGroup, n: i64) -> Self {
        let cl = g.classes();
        let values = (0..cl.len()).map(|k| self.values[cl.power(k, n)].clone()).collect();
        ClassFunction { group: self.group.clone(), values }
    }

    /// Adams operation for a big exponent, reduced modulo the group exponent.
    pub fn adams_big(&self, g: &FiniteGroup, n: &BigUint) -> Self {
        let r = (n % BigUint::from(g.exponent())).to_i64().unwrap();
        self.adams(g, r)
    }

    /// Frobenius–Schur indicator `(1/|G|) Σ χ(g²)`.
    pub fn frobenius_schur(&self, g: &FiniteGroup) -> Result<i64> {
        let cl = g.classes();
        let mut acc = Cyclotomic::zero();
        for k in 0..cl.len() {
            acc += &self.values[cl.power(k, 2)].scale_int(cl.size(k) as i64);
        }
        let v = acc.scale(&BigRational::new(1.into(), BigInt::from(g.order())));
        v.to_i64()
            .filter(|x| (-1..=1).contains(x))
            .ok_or_else(|| Error::Internal(format!("indicator {v} outside {{-1,0,1}}")))
    }

    /// Values on the elements of `h` (positions follow `h.elements()`).
    pub fn restrict(&self, g: &FiniteGroup, h: &Subgroup) -> Vec<Cyclotomic> {
        let cl = g.classes();
        h.elements().iter().map(|&x| self.values[cl.class_of(x)].clone()).collect()
    }

    /// Induce a class function of `h`, given by its value on each element of `h`.
    pub fn induce(g: &FiniteGroup, h: &Subgroup, values: &[Cyclotomic]) -> Self {
        assert_eq!(values.len(), h.elements().len());
        let cl = g.classes();
        let mut sums = vec![Cyclotomic::zero(); cl.len()];
        for (&x, v) in h.elements().iter().zip(values) {
            if !v.is_zero() {
                sums[cl.class_of(x)] += v;
            }
        }
        let hord = h.order() as i64;
        let values = sums
            .into_iter()
            .enumerate()
            .map(|(k, s)| s.scale(&BigRational::new(BigInt::from(cl.centralizer_order(k)), BigInt::from(hord))))
            .collect();
        ClassFunction::new(g, values)
    }

    /// Induce an integer-valued function of `h` given per element.
    pub fn induce_ints(g: &FiniteGroup, h: &Subgroup, values: &[i64]) -> Self {
        let cl = g.classes();
        let mut sums = vec![0i128; cl.len()];
        for (&x, &v) in h.elements().iter().zip(values) {
            sums[cl.class_of(x)] += v as i128;
        }
        let hord = h.order() as i128;
        let values = sums
            .into_iter()
            .enumerate()
            .map(|(k, s)| {
                let num = s * cl.centralizer_order(k) as i128;
                Cyclotomic::from_rational(BigRational::new(BigInt::from(num), BigInt::from(hord)))
            })
            .collect();
        ClassFunction::new(g, values)
    }

    /// `Ind_H^G(1)`, the permutation character on the cosets of `h`.
    pub fn induce_trivial(g: &FiniteGroup, h: &Subgroup) -> Self {
        Self::induce_ints(g, h, &vec![1; h.elements().len()])
    }

    /// Inner product of two functions on the elements of a subgroup.
    pub fn inner_on_subgroup(h: &Subgroup, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (x, y) in a.iter().zip(b) {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            acc += &(x * &y.conj());
        }
        acc.scale(&BigRational::new(1.into(), BigInt::from(h.order())))
    }

    /// Sum of values weighted by class size over the listed classes, divided by |G|.
    pub fn mean_over(&self, g: &FiniteGroup, classes: &[usize]) -> Cyclotomic {
        let cl = g.classes();
        let mut acc = Cyclotomic::zero();
        for &k in classes {
            acc += &self.values[k].scale_int(cl.size(k) as i64);
        }
        acc.scale(&BigRational::new(1.into(), BigInt::from(g.order())))
    }

    pub fn is_zero_on(&self, classes: &[usize]) -> bool {
        classes.iter().all(|&k| self.values[k].is_zero())
    }

    pub fn sum_of<'a>(g: &FiniteGroup, items: impl IntoIterator<Item = &'a ClassFunction>) -> Self {
        items.into_iter().fold(Self::zero(g), |acc, x| &acc + x)
    }

    pub fn is_rational_zero(v: &Cyclotomic) -> bool {
        v.to_rational().is_some_and(|r| r.is_zero())
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip(rhs, |a, b| a * b)
    }
}

impl Neg for &ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        self.map(|v| -v)
    }
}

impl Add for ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: ClassFunction) -> ClassFunction {
        &self + &rhs
    }
}

impl Sub for ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: ClassFunction) -> ClassFunction {
        &self - &rhs
    }
}

/// Rational `a/b` as a cyclotomic.
pub fn frac(a: i64, b: i64) -> Cyclotomic {
    Cyclotomic::from_rational(BigRational::new(a.into(), b.into()))
}

pub(crate) fn is_nonneg_int(v: &Cyclotomic) -> bool {
    v.to_integer().is_some_and(|i| i >= BigInt::zero())
}
