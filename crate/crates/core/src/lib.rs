//! A monomial-ideal kernel for computing associated primes, initial degrees and
//! v-numbers of graded subquotient modules `A/B`, plus a laboratory that
//! evaluates these invariants along the filtrations `IⁿM/IⁿN`, `M/IⁿN` and
//! `IⁿM/Iⁿ⁺¹N` and checks their eventual linear behaviour.

pub mod ass;
pub mod error;
pub mod extint;
pub mod io;
pub mod kernel;
pub mod lab;
pub mod quotient;
pub mod vnumber;

pub use ass::{ass, ass_oracle, AssSet, MonomialPrime};
pub use error::{Error, Result};
pub use extint::ExtInt;
pub use kernel::{GradedRing, Monomial, MonomialIdeal};
pub use quotient::Subquotient;
pub use vnumber::{v, VReport};
