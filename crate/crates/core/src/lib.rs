//! Catabolizability of standard Young tableaux.
//!
//! The centerpiece is the catabolism insertion algorithm in [`insertion`],
//! which computes `ctype(P(w))` directly from the cocharge labeling of a
//! standard word `w`. The definitional catabolism operators live in
//! [`catabolism`] and serve as its reference; [`chains`] gives the
//! chain-family characterization, [`poset`] the cocyclage poset and
//! [`frobenius`] the graded Frobenius-series tables.

pub mod catabolism;
pub mod chains;
pub mod cocharge;
pub mod error;
pub mod frobenius;
pub mod insertion;
pub mod partition;
pub mod poset;
pub mod tableau;
pub mod verify;
pub mod word;

pub use catabolism::{ctype_greedy, is_catabolizable, superstandard, superstandard_syt, Mode};
pub use cocharge::{cocharge, cocharge_label, standard_word_from_labeling};
pub use error::{Error, Result};
pub use insertion::{catabolizability, run_algorithm3, run_f, Trace};
pub use partition::{Dominance, Partition};
pub use tableau::{row_insert, Tableau};
pub use word::{LabeledWord, StandardWord};
