//! Crate-wide error type with stable machine-readable codes.

use thiserror::Error;

/// Broad classification used by the command-line front end for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Well-formed input on which an operation is undefined.
    Domain,
    /// Input that could not be parsed or validated.
    Input,
    /// A computed instance contradicts the main identity.
    Identity,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed tree document: {0}")]
    Malformed(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateId(String),
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownEndpoint(String),
    #[error("root `{0}` is not a vertex")]
    UnknownRoot(String),
    #[error("edge ({0}, {1}) closes a cycle")]
    Cycle(String, String),
    #[error("tree is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("word reduces to the empty word")]
    EmptyWord,
    #[error("merge requires one all-c input (Floer-simplicity proxy failed)")]
    MergePrecondition,
    #[error("at plan node {node}: {source}")]
    AtPlanNode {
        node: String,
        #[source]
        source: Box<Error>,
    },
    #[error("word is not fixed by the elliptic involution")]
    NotSymmetric,
    #[error("alpha and beta letter counts are both even; Delta_sym labeling undefined")]
    EvenEven,
    #[error("no homologically nontrivial symmetric component")]
    NoDistinguishedCurve,
    #[error("distinguished curve not unique")]
    DistinguishedNotUnique,
    #[error("component {0} has no alpha letters; the beta filling is not a rational homology sphere")]
    PureBetaComponent(usize),
    #[error("component {0} has signed alpha count 0; the filling is not a rational homology sphere")]
    ZeroAlphaCount(usize),
    #[error("generators lie in different spin-c classes; the closing path does not close")]
    DifferentSpinc,
    #[error("generator index {0} out of range")]
    NoSuchGenerator(usize),
    #[error("fixed point x1 is not a pairing generator (curve is not of type alpha)")]
    NotTypeAlpha,
    #[error("path reverses direction at an interior corner")]
    InteriorReversal,
    #[error("path is not closed")]
    NotClosed,
    #[error("intersection form is singular (det = 0)")]
    SingularForm,
    #[error("not a Z2-homology solid torus ({0} relative Wu sets)")]
    NotZ2SolidTorus(usize),
    #[error("expected exactly two Wu sets, found {0}")]
    WuSetCount(usize),
    #[error("vertex set is not a Wu set")]
    NotWuSet,
    #[error("relative Wu set enumeration exceeds 2^{0} solutions")]
    TooManyWuSets(usize),
    #[error("count must be at least 1")]
    ZeroCount,
    #[error("identity violated: {0}")]
    IdentityViolation(String),
}

impl Error {
    /// Stable identifier reported in JSON envelopes.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Malformed(_) => "malformed",
            Error::DuplicateId(_) => "duplicate_id",
            Error::UnknownEndpoint(_) => "unknown_endpoint",
            Error::UnknownRoot(_) => "unknown_root",
            Error::Cycle(..) => "cycle",
            Error::Disconnected(_) => "disconnected",
            Error::MalformedWord(_) => "malformed_word",
            Error::EmptyWord => "empty_word",
            Error::MergePrecondition => "merge_precondition",
            Error::AtPlanNode { source, .. } => source.code(),
            Error::NotSymmetric => "not_symmetric",
            Error::EvenEven => "even_even",
            Error::NoDistinguishedCurve => "no_distinguished_curve",
            Error::DistinguishedNotUnique => "distinguished_not_unique",
            Error::PureBetaComponent(_) => "pure_beta_component",
            Error::ZeroAlphaCount(_) => "zero_alpha_count",
            Error::DifferentSpinc => "different_spinc",
            Error::NoSuchGenerator(_) => "no_such_generator",
            Error::NotTypeAlpha => "not_type_alpha",
            Error::InteriorReversal => "interior_reversal",
            Error::NotClosed => "not_closed",
            Error::SingularForm => "singular_form",
            Error::NotZ2SolidTorus(_) => "not_z2_solid_torus",
            Error::WuSetCount(_) => "wu_set_count",
            Error::NotWuSet => "not_wu_set",
            Error::TooManyWuSets(_) => "too_many_wu_sets",
            Error::ZeroCount => "zero_count",
            Error::IdentityViolation(_) => "identity_violation",
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Malformed(_)
            | Error::DuplicateId(_)
            | Error::UnknownEndpoint(_)
            | Error::UnknownRoot(_)
            | Error::Cycle(..)
            | Error::Disconnected(_)
            | Error::MalformedWord(_)
            | Error::ZeroCount => ErrorClass::Input,
            Error::IdentityViolation(_) => ErrorClass::Identity,
            Error::AtPlanNode { source, .. } => source.class(),
            _ => ErrorClass::Domain,
        }
    }

    /// Strips plan-node tags.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::AtPlanNode { source, .. } => source.root_cause(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
