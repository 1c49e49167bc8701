//! Exact combinatorics of t-spread lexsegment ideals.
//!
//! The crate enumerates the t-spread monomials `M(n,d,t)` in the squarefree
//! lexicographic order, builds arbitrary, initial and final t-spread
//! lexsegments, decides when a lexsegment ideal is *completely* lexsegment,
//! classifies those with a linear resolution and evaluates closed-form graded
//! Betti numbers. A formula-free homology oracle ([`oracle`]) recomputes Betti
//! tables from scratch so that every closed form can be cross-checked.
//!
//! ```
//! use tspread::{LexsegmentSpec, Monomial, Params};
//!
//! let p = Params::new(11, 3, 3);
//! let u = Monomial::parse("x1*x5*x8", 11)?;
//! let v = Monomial::parse("x2*x5*x8", 11)?;
//! let spec = LexsegmentSpec::new(p, u, v)?;
//! assert_eq!(spec.segment().len(), 11);
//! assert!(spec.is_completely_by_criterion()?.completely);
//! # Ok::<(), tspread::Error>(())
//! ```

pub mod betti;
pub mod binomial;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod lexsegment;
pub mod monomial;
pub mod oracle;

pub use betti::{BettiTable, Convention, CycleLabel, Side};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use lexsegment::{Completeness, CriterionVerdict, DecisionMethod, LexsegmentSpec, SegmentKind};
pub use monomial::{cmp_slex, shift_sigma, shift_tau, GapProfile, Monomial, Params};
pub use oracle::PrimeField;
