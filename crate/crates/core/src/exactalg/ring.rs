use std::fmt::{Debug, Display};

use num_traits::{One, Signed, Zero};

use super::Integer;

/// A commutative ring with exact, structurally comparable elements.
///
/// Elements carry enough context (such as a polynomial's variable) to build
/// the ring's zero and one from any element, so generic containers never need
/// a separate ring object.
///
/// The binary operations panic when the operands live in incompatible rings
/// (for example polynomials in different variables). The checked free
/// functions in [`super`] report that case as an error instead.
pub trait Ring: Clone + PartialEq + Debug + Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Embeds an integer constant in the same ring as `self`.
    fn lift_integer(&self, value: &Integer) -> Self;
    /// The multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Ring for Integer {
    fn zero_like(&self) -> Self {
        Integer::zero()
    }

    fn one_like(&self) -> Self {
        Integer::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn lift_integer(&self, value: &Integer) -> Self {
        value.clone()
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}
