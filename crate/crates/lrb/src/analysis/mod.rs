//! Both-sides checks of the Peirce character formulas, derangement numbers
//! and representations, and random-to-top spectra.

pub mod catzero;
pub mod chains;
pub mod derangement;
pub mod det;
pub mod rtt;
pub mod theorem_c;
pub mod theorem_d;
pub mod theorem_e;
pub mod verdict;

pub use catzero::{catzero_report, strong_simpliciality_violations, CatZeroReport};
pub use derangement::{
    derangement_character, derangement_mobius, derangement_number, derangement_positive, derangement_recursive,
    DerangementReport,
};
pub use det::arrangement_det_vs_deg_check;
pub use rtt::{random_to_top, SpectrumReport};
pub use theorem_c::theorem_c_check;
pub use theorem_d::theorem_d_check;
pub use theorem_e::{symmetric_group_checks, theorem_e_checks};
pub use verdict::{all_pass, failures, Verdict};

use crate::algebra::cfpoi::{build_cfpoi, choose_seeds, Cfpoi, SeedPolicy};
use crate::algebra::kb::SemigroupAlgebra;
use crate::error::Result;
use crate::field::Rationals;
use crate::group::action::GroupAction;
use crate::rational::Q;

/// The orbit-averaged (hence `G`-invariant) cfpoi over `Q`.
pub fn invariant_cfpoi(alg: &SemigroupAlgebra<Rationals>, action: &GroupAction, policy: SeedPolicy) -> Result<Cfpoi<Q>> {
    build_cfpoi(alg, choose_seeds(alg, action, policy)?, Some(action))
}
