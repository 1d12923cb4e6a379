//! Apolarity, catalecticants, Betti tables and degeneracy loci of matrices of
//! linear forms, with the constructions around cubic fourfolds apolar to the
//! Veronese surface.

pub mod error;
pub mod field;
pub mod form;
pub mod matrix;
pub mod monomial;
pub mod rank_loci;
pub mod repro;
pub mod text;
pub mod univariate;
pub mod apolarity;
pub mod cli;
pub mod constructions;
pub mod resolutions;

pub use error::{Error, Result};
pub use field::{Field, FieldDesc, Fp, Fp2, Fp2Ctx, Q};
pub use form::{Alphabet, HomogeneousForm};
pub use matrix::{Matrix, Subspace};
