use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown piece code {0:?}")]
    UnknownCode(char),
    #[error("corner labels must be pairwise distinct, got {0:?}")]
    DuplicateLabel([u32; 4]),
    #[error("corners {0:?} are not a permutation of 1..=4")]
    NotAPermutation([u8; 4]),
    #[error("rows have different lengths ({top} vs {bottom})")]
    RowLengthMismatch { top: usize, bottom: usize },
    #[error("labels are not exactly 1..={0}")]
    NotStandard(usize),
    #[error("puzzle must have at least one column")]
    EmptyPuzzle,
    #[error("cannot parse puzzle literal {0:?}")]
    PuzzleLiteral(String),
    #[error("support must contain at least one piece")]
    EmptySupport,
    #[error("piece {0} appears twice in support literal")]
    DuplicatePiece(char),
    #[error("support size {0} is outside 1..=24")]
    SupportSize(usize),
    #[error("inverse reduction undefined for x={x}, X={top}, Y={bottom} at width {width}")]
    InverseReductionDomain {
        x: u16,
        top: u16,
        bottom: u16,
        width: usize,
    },
    #[error("width must be at least {min}, got {width}")]
    WidthTooSmall { width: usize, min: usize },
    #[error("oracle limited to width {bound}, asked for {width}")]
    OracleBound { width: usize, bound: usize },
    #[error("flip position {position} is outside 1..={width}")]
    FlipOutOfRange { position: usize, width: usize },
    #[error("piece {piece} at position ({position},{next}) is outside {family}", next = position + 1)]
    OutsideFamily {
        piece: char,
        position: usize,
        family: &'static str,
    },
    #[error("boundary labels must differ and lie in 1..={max}, got X={top}, Y={bottom}")]
    BoundaryLabels { top: u16, bottom: u16, max: usize },
    #[error("unknown reference sequence {0:?}")]
    UnknownReference(String),
    #[error("division by {divisor} is not exact")]
    InexactDivision { divisor: String },
    #[error("unknown report format {0:?}")]
    UnknownFormat(String),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
    #[error("no parsable sequence lines in {0}")]
    EmptyOeisTable(String),
    #[error("malformed report: {0}")]
    Report(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
