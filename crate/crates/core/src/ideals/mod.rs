//! Ideals of a presented local ring `A = D/𝔞` and lengths of Artinian quotients.

mod ideal;
mod length;
mod ring;

pub use ideal::{
    containment_witness, eliminate, ideal_colon, ideal_colon_elim, ideal_combine, ideal_contains,
    ideal_equal, ideal_intersect, ideal_intersect_elim, Combine, IdealHandle,
};
pub use length::{
    artinian_length, monomial_exponents, monomial_length_oracle, quotient_length, LengthValue,
    TRUNCATION_CAP,
};
pub use ring::RingPresentation;

#[cfg(test)]
mod tests;
