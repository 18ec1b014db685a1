use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cover index {index} out of range for {n} elements")]
    CoverIndex { index: usize, n: usize },
    #[error("cover relation contains a cycle through {0:?}")]
    CoverCycle(Vec<usize>),
    #[error("element index {index} out of range for {n} elements")]
    Index { index: usize, n: usize },
    #[error("not a lattice{}", match .witness {
        Some((x, y)) => format!(": elements {x} and {y} lack a meet or a join"),
        None => String::from(": empty poset"),
    })]
    NotALattice { witness: Option<(usize, usize)> },
    #[error("element list is not a chain")]
    NotAChain,
    #[error("chain is not maximal: element {0} can be inserted")]
    ChainNotMaximal(usize),
    #[error("expected incomparable y={y}, z={z} below x={x}")]
    RefinementPrecondition { x: usize, y: usize, z: usize },
    #[error("enumeration size {n} exceeds the bound {bound}; raise the bound explicitly if you really want this")]
    EnumerationBound { n: usize, bound: usize },

    #[error("function space of size {required} exceeds the budget {budget}")]
    FunctionBudget { required: u128, budget: u128 },
    #[error("closure exceeded the element budget {budget} (reached {reached} elements)")]
    ClosureBudget { budget: usize, reached: usize },
    #[error("map {index} is not regressive on the poset")]
    NotRegressive { index: usize },
    #[error("map {index} is not order-preserving on the poset")]
    NotOrderPreserving { index: usize },
    #[error("the 1-Lipschitz class requires a chain poset")]
    NotAChainPoset,

    #[error("multiplication table is not square ({0})")]
    TableShape(String),
    #[error("associativity fails at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("identity law fails at element {element}")]
    IdentityLaw { element: usize },
    #[error("set of maps is not closed under composition: witness pair ({a}, {b})")]
    NotClosed { a: usize, b: usize },
    #[error("no identity map in the element list")]
    NoIdentity,
    #[error("monoid is not R-trivial; the coset order is not antisymmetric")]
    NotRTrivial,
    #[error("provided generators do not generate the monoid (element {missing} unreachable)")]
    GeneratorsIncomplete { missing: usize },

    #[error("coxeter matrix invalid: {0}")]
    CoxeterMatrix(String),
    #[error("generator {index} is not an involution")]
    NotInvolution { index: usize },
    #[error("product of generators {i} and {j} has order {actual}, expected {expected}")]
    CoxeterOrder { i: usize, j: usize, expected: usize, actual: usize },
    #[error("unsupported coxeter realization: {0}")]
    UnsupportedCoxeter(String),
    #[error("word enumeration budget exceeded ({words} words)")]
    WordBudget { words: u128 },

    #[error("normal vector {index} is zero")]
    ZeroNormal { index: usize },
    #[error("normals span a subspace of rank {rank} < {dim}; quotient by the common intersection first")]
    RankDeficient { rank: usize, dim: usize },
    #[error("sign vectors have different lengths ({a} vs {b})")]
    SignLength { a: usize, b: usize },
    #[error("{hyperplanes} hyperplanes exceed the sign-vector budget of {max}")]
    FaceBudget { hyperplanes: usize, max: usize },
    #[error("face product of realizable faces {a} and {b} is not realizable; feasibility is buggy")]
    FaceClosure { a: String, b: String },
    #[error("inequality elimination exceeded the row budget")]
    EliminationBudget,

    #[error("invalid pointed set: {0}")]
    PointedSet(String),
    #[error("invalid block sequence: {0}")]
    Blocks(String),

    #[error("{0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
