use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(i64),
    #[error("r* is undefined for k={k}, m={m}: gcd(k,m)={gcd} > 2")]
    StarUndefined { k: u64, m: u64, gcd: u64 },
    #[error("{value} is not coprime to {modulus}")]
    NotCoprime { value: i64, modulus: u64 },
    #[error("modulus mismatch: expected residue mod {expected}, got mod {actual}")]
    ModulusMismatch { expected: u64, actual: u64 },
    #[error("segment length c={c} outside [1, {max}]")]
    InvalidSegment { c: i64, max: i64 },
    #[error("invalid signature component {0}: each of k, l, m must be at least 2")]
    InvalidSignature(u64),
    #[error("invalid fiber (a={a}, b={b}): need 0<a<k, 0<b<l and a/k+b/l<1")]
    InvalidFiber { a: i64, b: i64 },
    #[error("base-group element id {id} out of range for group of order {order}")]
    InvalidLetter { id: usize, order: usize },
    #[error("base-group element id {0} is not in the group")]
    UnknownElement(usize),
    #[error("words or automorphisms from different base groups")]
    MixedBase,
    #[error("elements or classes from different groups")]
    MixedGroups,
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("invalid order d={d}: {reason}")]
    InvalidOrder { d: u64, reason: String },
    #[error("invalid elimination case {0}: must be 1, 2, 3 or 4")]
    InvalidCase(u8),
    #[error("group exceeds the order cap of {cap}")]
    TooLarge { cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("({k},{l},{m}) is not spherical: no finite realization")]
    NotFinite { k: u64, l: u64, m: u64 },
    #[error("s={s} is not coprime to the group exponent {exponent}")]
    InvalidS { s: i64, exponent: u64 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid angle: {0}")]
    InvalidAngle(String),
    #[error("matrix is not elliptic (trace {trace})")]
    NotElliptic { trace: f64 },
    #[error("numeric search inconclusive: {0}")]
    Inconclusive(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
