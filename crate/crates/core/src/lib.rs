//! Exact computation of convolution triangles `c_m(n, k)` and iterated invert
//! transforms `f_m(n)` for binomial-coefficient initial families, together
//! with closed forms, identities and brute-force counting oracles.
//!
//! ```
//! use binwords::{fm, FamilySpec};
//!
//! let f1 = fm(&FamilySpec::Row { a: 2 }, 1, 5).unwrap();
//! let v: Vec<String> = f1.values().iter().map(|x| x.to_string()).collect();
//! assert_eq!(v, ["1", "3", "6", "13", "28"]);
//! ```

pub mod bfile;
pub mod closed_forms;
pub mod error;
pub mod families;
pub mod kernel;
pub mod oracles;
pub mod report;
pub mod transforms;
pub mod verify;

pub use bfile::BFile;
pub use closed_forms::IdentityResult;
pub use error::{Error, Result};
pub use families::{f0, word_length, FamilySpec, Origin, SeqFn, DEFAULT_TRUNCATION};
pub use kernel::{binomial, ExactInt};
pub use report::{Case, CheckReport, Status, Summary};
pub use transforms::{
    c_triangle, cm, fm, invert_transform, lift_cm_from_c1, lift_fm_from_c1, CTriangle,
};
pub use verify::{run_oeis, run_suite, Bounds, Suite};
