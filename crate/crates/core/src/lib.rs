//! Planarity of Cayley graphs of graph products of finite cyclic groups.
//!
//! [`decider::decide`] evaluates the four graph conditions that characterise
//! planarity. Non-planar verdicts come with explicit K3,3 subdivisions in the
//! Cayley graph ([`witnesses`]); planar verdicts come with a decomposition
//! into free products and amalgams over Z₂ ([`decomposition`]). Finite balls
//! of the Cayley graph ([`cayley`]) and an independent planarity engine
//! ([`planarity`]) allow both to be cross-checked.

pub mod cayley;
pub mod corpus;
pub mod decider;
pub mod decomposition;
pub mod dot;
pub mod graph_model;
pub mod io;
pub mod planarity;
pub mod subdivision;
pub mod witnesses;
pub mod words;

pub use cayley::{ball, ball_with_cap, BallError, CayleyBall};
pub use decider::{decide, Condition, ConditionViolation, Verdict};
pub use decomposition::{plan, validate_plan, DecompositionPlan, PlanError, PlanNode};
pub use graph_model::{expand_abelian, AbelianProductGraph, GraphCertificate, GraphError, ProductGraph};
pub use planarity::{is_outerplanar, is_planar, kuratowski_witness, RotationSystem, SimpleGraph};
pub use subdivision::{Model, Subdivision};
pub use witnesses::{verify_witness, witness_cycle, witness_edge, witness_for, witness_star, SubdivisionWitness};
pub use words::{invert, is_generator_step, multiply, normalize, NormalForm, Syllable, Word};
