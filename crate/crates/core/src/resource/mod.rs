//! The `G_abcd` resource state, the secret qubit, and the parameter-region
//! predicates for revocation and reconstruction.

mod admissibility;
mod params;
mod sampling;

pub use admissibility::{
    admissibility, theorem1_check, theorem2_check, AdmissibilityReport, CaseCheck, Coefficient,
    Condition, LambdaCheck, Theorem1Report, Theorem2Report,
};
pub use params::{build_g_state, GParams, ParamError, Secret};
pub use sampling::{
    sample_params, sample_theorem1_case, sample_theorem2_case, theorem1_case_point,
    theorem2_case_point, Region, SampleError,
};

/// Qubit labels of the five-qubit protocol register, in register order.
pub mod register {
    pub const SECRET: &str = "S";
    pub const ALICE_1: &str = "A1";
    pub const ALICE_2: &str = "A2";
    pub const BOB: &str = "B";
    pub const CHARLIE: &str = "C";

    pub const RESOURCE: [&str; 4] = [ALICE_1, ALICE_2, BOB, CHARLIE];
    pub const SHARED: [&str; 3] = [ALICE_2, BOB, CHARLIE];
}
