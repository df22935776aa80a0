//! Laplacian spectra of simple graphs, the closed-form bounds on sums of
//! the largest Laplacian eigenvalues, and brute-force checks of Brouwer's
//! conjecture `S_k(G) <= m + C(k+1, 2)`.

pub mod bounds;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod spectra;
pub mod verify;

pub use bounds::{BoundEvaluation, KInterval, Theorem};
pub use error::{BoundsError, EdgeListError, Graph6Error, GraphError, SpectraError, VerifyError};
pub use graph::{enumerate_labeled, family, random_gnm, Family, Graph};
pub use graph6::{parse_graph6, to_graph6};
pub use spectra::{eigenvalues_sym, laplacian, Spectrum, SymmetricMatrix};
pub use verify::{
    check_all_k, check_conjecture, exhaustive_sweep, IdentityReport, Status, SweepSummary,
    VerificationRecord,
};
