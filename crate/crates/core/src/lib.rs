//! Exact linear algebra for enhanced ADHM quiver representations: relations,
//! stability, the deformation complex and its cohomology, and constructions.

pub mod constructions;
pub mod deformation;
pub mod error;
pub mod exactmat;
pub mod oracle;
pub mod quiver;
pub mod stability;

pub use error::{CoreError, Result};
pub use exactmat::{Field, Matrix, RatMatrix, RatSubspace, Rational, Subspace};
pub use quiver::{AdhmRep, DimVector, EnhancedParts, EnhancedRep};
