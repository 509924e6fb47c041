//! Closed forms for the Smirnov word enumerators and the suites that check
//! them against brute-force enumeration.

mod closed;
mod fexp;
mod powersum;
mod qeuler;
mod report;
mod suites;
mod transfer;

pub use closed::{
    abc, brute_e_expansion, cleared_denominator, cleared_form_check, closed_form, closed_series,
    denominator_form_check, denominator_series, e_generator_series, enumerator_series, numerator_coefficient,
    numerator_series, tilde_shape_coefficient, SeriesIdentity, SeriesSource,
};
pub use fexp::{f_expansion, FExpansion};
pub use powersum::{
    h_ratio_power, h_ratio_power_form, powersum_coefficient, powersum_form, powersum_top_coefficient,
    shuffle_base, shuffle_greater, shuffle_less, stembridge_sides,
};
pub use qeuler::{
    q_eulerian, q_eulerian_with, q_exp_identity, root_of_unity, QEulerian, QStatistic, RootEvaluation,
};
pub use report::{CheckRecord, Report, Status, Suite, VerifyConfig};
pub use suites::run_suite;
pub use transfer::{
    det_bareiss, det_cofactor, distinguished_element_sides, transfer_determinant, transfer_expected,
    transfer_matrix, transfer_matrix_check,
};
