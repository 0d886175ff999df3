use thiserror::Error;

/// Errors reported by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("operands are over different alphabets")]
    AlphabetMismatch,

    #[error("symbol {symbol} is not in the alphabet (size {alphabet_size})")]
    SymbolOutOfRange { symbol: usize, alphabet_size: usize },

    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(String),

    #[error("letter {0:?} is already in the alphabet")]
    LetterAlreadyPresent(String),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("parse error at line {line}: {message}")]
    ParseDfa { line: usize, message: String },

    #[error("regex syntax error at byte {position}: {message}")]
    ParseRegex { position: usize, message: String },

    #[error("automaton is not minimal")]
    NotMinimal,

    #[error("language is infinite")]
    InfiniteLanguage,

    #[error("language is not subword-free")]
    NotSubwordFree,

    #[error("quotient complexity {kappa} is below the required minimum {minimum}")]
    ComplexityTooSmall { kappa: usize, minimum: usize },

    #[error("witness family {family}: parameter out of range: {message}")]
    BadWitnessParams { family: String, message: String },

    #[error("witness family {family}: construction failed: {message}")]
    WitnessConstruction { family: String, message: String },

    #[error("no bound formula is stored for class {class} and operation {operation}")]
    UnknownBound { class: String, operation: String },

    #[error("bound formula for class {class}, operation {operation} is not valid at m={m}, n={n}: {message}")]
    BoundOutOfRange {
        class: String,
        operation: String,
        m: usize,
        n: usize,
        message: String,
    },

    #[error(
        "search space too large without an explicit cap: {message} (pass a candidate cap to force)"
    )]
    SearchInfeasible { message: String },

    #[error("operation {operation} expects {expected} operand(s), got {got}")]
    ArityMismatch {
        operation: String,
        expected: usize,
        got: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
