//! Coefficient tables as formula text, one string per coefficient.
//!
//! Racah tables are written in the lattice variables X, Y. Wilson and
//! continuous dual Hahn tables are written in the raw x, y and contain only
//! even powers. Continuous Hahn tables use x, y (, z) and the unit i.

/// Operator index (l_x, l_y) for f1..f8 of every bivariate table.
pub const BIVARIATE_INDEX: [[u8; 2]; 8] = [[2, 2], [1, 2], [2, 1], [1, 1], [2, 0], [0, 2], [1, 0], [0, 1]];

pub const RACAH: [&str; 8] = [
    // f1
    "-X^2 Y - X Y^2 + (N^2 + b3 N - (1/2) b2 (b2 - b3)) X^2 + (1/2) b1 (b0 - b1) Y^2
     + (((1/2) b1 + 1/2 - (1/2) b3 - b0) b2 - b3 - (1/2) b1 + 2 b0 b3 + b0 + N^2 - b1 b3 + b3 N - (1/2) b1 b0) X Y
     + (((1/2) b1 b0 + (1/2) b2^2 + (1/2) b1 b2 + (1/2) b2 - b0 b2 + (1/2) b1 - b0) N^2
        + (1/2) b3 (b1 b0 + b2^2 + b1 b2 + b2 - 2 b0 b2 + b1 - 2 b0) N
        - (1/4) b2 (b2 - b3) (b1 b0 + b1 - 2 b0)) X
     - (1/4) b1 (b2 - 2 b3 + 2 b3 N + 2 N^2 - b2 b3) (b0 - b1) Y
     - (1/4) N b1 b2 (b2 + 1) (b0 - b1) (b3 + N)",
    // f2
    "(b0 - b1) Y^2 + X ((b0 + b2 - 2 b3 - 1) Y + (1 - b0 + b2) N^2 - b3 (-1 + b0 - b2) N + (1/2) b2 (b2 - b3) (b0 - 1))
     - (1/2) (b0 - b1) (2 b3 N - b3 b2 + 2 N^2 - 2 b3 + b2) Y
     - (1/2) (b0 - b1) N b2 (b2 + 1) (b3 + N)",
    // f3
    "(b2 - b3) X^2 + X (-(1 + b1 + b3 - 2 b0) Y + (1 + b1 - 2 b0 + b2) N^2 - b3 (-b1 - b2 - 1 + 2 b0) N
        + (1/2) (b2 - b3) (b1 b0 - 2 b0 + b1))
     + (1/2) b1 (b3 + 1) (b0 - b1) Y - (1/2) b1 N (b2 + 1) (b3 + N) (b0 - b1)",
    // f4
    "-2 X Y + (2 N^2 + b2 (1 - b0) + b3 (b0 - 1 + 2 N)) X + (b0 - b1) (b3 + 1) Y - N (b0 - b1) (b2 + 1) (b3 + N)",
    // f5
    "-X^2 + (1/2) (2 b3 (N + b0) + 2 N^2 - b1 (b3 + b0)) X - (1/2) N b1 (b0 - b1) (b3 + N)",
    // f6
    "-Y^2 + (1/2) (2 N^2 + 2 b3 (b0 + N) - b2 (b3 + b0)) Y - (1/2) N b2 (b0 - b2) (b3 + N)",
    // f7
    "(b0 - b3) X - N (b0 - b1) (b3 + N)",
    // f8
    "(b0 - b3) Y - N (b0 - b2) (b3 + N)",
];

pub const RACAH_EIGEN: &str = "k (b3 - b0 + k - 1)";

pub const WILSON: [&str; 8] = [
    // f1
    "x^4 y^2 + x^2 y^4 - c d x^4 - a b y^4
     + ((-2 c - 2 b - 2 d - 1 - 2 a) e2 - e2^2 - a - b - d - c - d c - b a - 2 c a - 2 d b - 2 b c - 2 a d) x^2 y^2
     + d c (e2^2 + (2 b + 2 a + 1) e2 + b + b a + a) x^2
     + b a (e2^2 + (2 c + 2 d + 1) e2 + c + d + d c) y^2
     - a d b e2 c (1 + e2)",
    // f2
    "(a + b) y^4 - d c (1 + a + b + 2 e2) x^2 + (a + b + 2 e2 + 2 c + 2 d + 1) x^2 y^2
     + d c ((a + b) e2^2 + (2 b a + a + b) e2 + b a)
     + ((-a - b) e2^2 + (-a - 2 b a - 2 a d - 2 b c - b - 2 c a - 2 d b) e2
        - d b c - b a - c a - a d - 2 d b a - b c - a d c - 2 b a c - d b) y^2",
    // f3
    "(c + d) x^4 - b a (2 e2 + d + c + 1) y^2 + (1 + 2 a + 2 e2 + c + d + 2 b) x^2 y^2
     + b a ((c + d) e2^2 + (d + c + 2 d c) e2 + d c)
     + ((-c - d) e2^2 + (-2 a d - 2 b c - 2 c a - 2 d b - c - d - 2 d c) e2
        - d b - c a - b c - 2 a d c - d c - d b a - b a c - a d - 2 d b c) x^2",
    // f4
    "-2 x^2 y^2 + (d + c + 2 c e2 + c a + b c + 2 d c + d b + 2 e2 d + a d) x^2
     + (2 a e2 + c a + a d + a + 2 b e2 + 2 b a + b c + d b + b) y^2
     - (c + d) (a + b) e2^2
     + (-2 d b a - 2 a d c - a d - 2 d b c - c a - d b - b c - 2 b a c) e2
     - 2 d b a c - a d c - d b a - b a c - d b c",
    // f5
    "-x^4 + (e2^2 + 2 a e2 + e2 d + a d + 2 b e2 + b a + b c + c e2 + d c + d b + c a) x^2 - b a (e2 + d) (e2 + c)",
    // f6
    "-y^4 + (b e2 + b a + 2 c e2 + c a + a e2 + e2^2 + b c + d c + d b + 2 e2 d + a d) y^2 - d c (e2 + b) (e2 + a)",
    // f7
    "(-a - b - 2 e2 - c - d) x^2 + (a + b) e2^2 + (b c + d b + a d + 2 b a + c a) e2 + b a c + d b c + a d c + d b a",
    // f8
    "(-a - b - 2 e2 - c - d) y^2 + (c + d) e2^2 + (a d + c a + d b + b c + 2 d c) e2 + a d c + d b a + b a c + d b c",
];

pub const WILSON_EIGEN: &str = "k (2 e2 + a + b + c + d + k - 1)";

pub const CDH: [&str; 8] = [
    // f1
    "-b e2 c a (1 + e2) + (-1 - 2 c - 2 e2 - 2 b - a) x^2 y^2 + c b (1 + 2 e2 + a) x^2 - a y^4
     + a (c b + e2 + b + 2 e2 b + e2^2 + 2 c e2 + c) y^2",
    // f2
    "c b (2 a e2 + a + e2 + e2^2) + x^2 y^2 - x^2 c b + y^4
     + (-e2 - a - b - e2^2 - 2 e2 b - 2 a e2 - 2 c a - c - 2 c e2 - c b - 2 a b) y^2",
    // f3
    "a (e2 b + 2 b e2 c + c e2 + c b + c e2^2 + b e2^2) + 2 x^2 y^2 - a (2 e2 + c + 1 + b) y^2
     + (-b - a b - 2 e2 b - 2 c b - c - 2 c e2 - c a) x^2",
    // f4
    "(-b - c) e2^2 + (-2 c a - 2 a b - b - 2 c b - c) e2 - c a - 2 b a c - c b - a b
     + (1 + 2 e2 + 2 a + b + c) y^2 + (c + b) x^2",
    // f5
    "-a (e2 + c) (e2 + b) + (2 e2 + a + b + c) x^2",
    // f6
    "-c b (a + e2) + (c + b + e2 + a) y^2",
    // f7
    "-x^2 + e2^2 + (c + 2 a + b) e2 + c a + c b + a b",
    // f8
    "-y^2 + (c + b) e2 + c b + a b + c a",
];

pub const CDH_EIGEN: &str = "k";

pub const CH: [&str; 8] = [
    // f1
    "-(1/4) a1 b3 - (1/4) b1 a3 + (1/2) x y + (1/4) i (-b3 + a3) x - (1/4) i (-b1 + a1) y",
    // f2
    "-(1/2) i (a1 b3 - b1 a3) + ((1/2) b3 + (1/2) a3) x + ((1/2) a1 + (1/2) b1) y",
    // f3
    "-(1/2) i (a1 b3 - b1 a3) + ((1/2) b3 + (1/2) a3) x + ((1/2) a1 + (1/2) b1) y",
    // f4
    "a1 b3 + b1 a3 - 2 x y - i (-b3 + a3) x + i (-b1 + a1) y",
    // f5
    "(1/2) a1 b3 + (1/2) b1 a3 + (1/2) a1 e2 + (1/2) b1 e2 + (1/2) i (a1 + b3 - a3 - b1) x - x^2",
    // f6
    "(1/2) a1 b3 + (1/2) e2 b3 + (1/2) e2 a3 + (1/2) b1 a3 - y^2 + (1/2) i (a1 + b3 - a3 - b1) y",
    // f7
    "i (a1 b3 - b1 a3 - b1 e2 + a1 e2) + (-a1 - b1 - 2 e2 - b3 - a3) x",
    // f8
    "i (a1 b3 + e2 b3 - e2 a3 - b1 a3) + (-a1 - b1 - 2 e2 - b3 - a3) y",
];

pub const CH_EIGEN: &str = "k (a1 - 1 + 2 e2 + b3 + a3 + b1 + k)";

/// Operator index (l_x, l_y, l_z) for f1..f26 of the trivariate table.
pub const TRIVARIATE_INDEX: [[u8; 3]; 26] = [
    [0, 0, 1],
    [0, 1, 0],
    [1, 0, 0],
    [0, 1, 1],
    [1, 0, 1],
    [1, 1, 0],
    [0, 0, 2],
    [0, 2, 0],
    [2, 0, 0],
    [1, 1, 1],
    [0, 1, 2],
    [2, 1, 0],
    [0, 2, 1],
    [2, 0, 1],
    [1, 2, 0],
    [1, 0, 2],
    [1, 1, 2],
    [1, 2, 1],
    [2, 1, 1],
    [0, 2, 2],
    [2, 2, 0],
    [2, 0, 2],
    [1, 2, 2],
    [2, 1, 2],
    [2, 2, 1],
    [2, 2, 2],
];

const T11: &str = "(1/2 b4 + 1/2 a4) y + (1/2 a1 + e2 + 1/2 b1) z + 1/2 i (b1 a4 + e2 a4 - b4 a1 - b4 e2)";
const T12: &str = "(1/2 a1 + 1/2 b1) y + (1/2 a4 + 1/2 b4 + e3) x - 1/2 i (-b1 e3 + b4 a1 - b1 a4 + a1 e3)";
const T14: &str = "(1/2 a1 + 1/2 b1) z + (1/2 b4 + 1/2 a4) x - 1/2 i (b4 a1 - b1 a4)";
const T17: &str = "(1/2 i (-b4 + a4) + z) x - 1/2 b1 a4 - 1/2 i (a1 - b1) z - 1/2 b4 a1";
const T23: &str = "(-1/4 a4 - 1/4 b4) x + (-1/4 a1 - 1/4 b1) z + 1/4 i (b4 a1 - b1 a4)";

pub const TRIVARIATE: [&str; 26] = [
    "(-a1 - 2 e2 - 2 e3 - b1 - b4 - a4) z - i (-b4 a1 + b1 a4 + e3 a4 - b4 e3 + e2 a4 - b4 e2)",
    "(-a1 - 2 e2 - 2 e3 - b1 - b4 - a4) y - i (-a1 e3 + b1 e3 - b4 e2 - b4 a1 + b1 a4 + e2 a4)",
    "i (-b1 e2 + b4 a1 - b1 a4 + a1 e3 - b1 e3 + a1 e2) + (-a1 - 2 e2 - 2 e3 - b1 - b4 - a4) x",
    "(-2 z - i (-b4 + a4)) y + i (a1 - b1) z + b1 a4 + e2 a4 + b4 a1 + b4 e2",
    "(-2 z - i (-b4 + a4)) x + i (a1 - b1) z + b1 a4 + b4 a1",
    "(-2 y - i (-b4 + a4)) x + i (a1 - b1) y + a1 e3 + b1 e3 + b4 a1 + b1 a4",
    "1/2 b4 a1 + 1/2 b1 a4 + 1/2 e2 a4 + 1/2 e3 a4 + 1/2 b4 e2 + 1/2 b4 e3 + 1/2 i (a1 - b1 - a4 + b4) z - z^2",
    "1/2 b4 a1 + 1/2 a1 e3 + 1/2 b1 e3 + 1/2 b1 a4 + e2 e3 + 1/2 e2 a4 + 1/2 b4 e2 + 1/2 i (a1 - b1 - a4 + b4) y - y^2",
    "1/2 a1 e2 + 1/2 b4 a1 + 1/2 a1 e3 + 1/2 b1 e2 + 1/2 b1 e3 + 1/2 b1 a4 + 1/2 i (a1 - b1 - a4 + b4) x - x^2",
    "(a4 + b4) x + (a1 + b1) z - i (b4 a1 - b1 a4)",
    T11,
    T12,
    T11,
    T14,
    T12,
    T14,
    T17,
    T17,
    T17,
    "(1/2 z + 1/4 i (-b4 + a4)) y - 1/4 e2 a4 - 1/4 b1 a4 - 1/4 i (a1 - b1) z - 1/4 b4 a1 - 1/4 b4 e2",
    "(1/2 y + 1/4 i (-b4 + a4)) x - 1/4 a1 e3 - 1/4 i (a1 - b1) y - 1/4 b1 a4 - 1/4 b4 a1 - 1/4 b1 e3",
    "(1/2 z + 1/4 i (-b4 + a4)) x - 1/4 b1 a4 - 1/4 i (a1 - b1) z - 1/4 b4 a1",
    T23,
    T23,
    T23,
    "(-1/8 i (-b4 + a4) - 1/4 z) x + 1/8 b4 a1 + 1/8 b1 a4 + 1/8 i (a1 - b1) z",
];

pub const TRIVARIATE_EIGEN: &str = "k (k - 1 + a1 + 2 e2 + 2 e3 + a4 + b1 + b4)";

/// Second-order equations φ·D²P + τ·SD·P + λ·P = 0 along one axis; λ is in `n`.
pub struct SecondOrderText {
    pub phi: &'static str,
    pub tau: &'static str,
    pub eigen: &'static str,
}

pub const RACAH_X_SECOND: SecondOrderText = SecondOrderText {
    phi: "-X^2 + X Y + (b0 b2 - b1/2 (b2 + b0)) X + b1/2 (b1 - b0) Y",
    tau: "(b0 - b2) X + (b1 - b0) Y",
    eigen: "n (b2 - b0 + n - 1)",
};

pub const WILSON_X_SECOND: SecondOrderText = SecondOrderText {
    phi: "x^4 - x^2 y^2 + (-2 a e2 - b a - 2 b e2 - e2^2) x^2 + a b y^2 + a b e2^2",
    tau: "(a + 2 e2 + b) x^2 - (a + b) y^2 - 2 b a e2 - b e2^2 - a e2^2",
    eigen: "-n (n - 1 + a + b + 2 e2)",
};

pub const WILSON_BAR_Y_SECOND: SecondOrderText = SecondOrderText {
    phi: "-x^2 y^2 + y^4 + c x^2 d + (-2 c e2 - d c - 2 d e2 - e2^2) y^2 + c d e2^2",
    tau: "(-c - d) x^2 + (c + 2 e2 + d) y^2 - d e2^2 - 2 d c e2 - c e2^2",
    eigen: "-m (m - 1 + c + d + 2 e2)",
};

pub const CDH_X_SECOND: SecondOrderText = SecondOrderText {
    phi: "(-a - 2 e2) x^2 + y^2 a + a e2^2",
    tau: "x^2 - y^2 - 2 a e2 - e2^2",
    eigen: "-n",
};

/// One term c·(P(shift) − P) of the nine-point Racah form, c = num/den.
pub struct StencilTermText {
    pub num: &'static str,
    pub den: &'static str,
    pub shift: [i64; 2],
}

// Terms printed as c·(I − P(shift)) carry the sign flip in `num`.
pub const RACAH_NINE_POINT: [StencilTermText; 8] = [
    StencilTermText {
        num: "(N - t) (b1 + s) (-b0 + b1 + s) (b3 + N + t) (b2 + s + t) (b2 + s + t + 1)",
        den: "(b1 + 2 s) (b1 + 2 s + 1) (b2 + 2 t) (b2 + 2 t + 1)",
        shift: [1, 1],
    },
    StencilTermText {
        num: "(b1 + s) (-b0 + b1 + s) (t - s) (b2 + s + t) ((b2 + 1) (b3 - 1) + 2 N (b3 + N) + 2 t (b2 + t))",
        den: "(b1 + 2 s) (b1 + 2 s + 1) (b2 + 2 t - 1) (b2 + 2 t + 1)",
        shift: [1, 0],
    },
    StencilTermText {
        num: "(N - t) (b3 + N + t) (b2 + s + t) (-b1 + b2 - s + t) ((b0 + 1) (b1 - 1) + 2 s (b1 + s))",
        den: "(b1 + 2 s - 1) (b1 + 2 s + 1) (b2 + 2 t) (b2 + 2 t + 1)",
        shift: [0, 1],
    },
    StencilTermText {
        num: "s (N - t) (b0 + s) (b3 + N + t) (b1 - b2 + s - t - 1) (b1 - b2 + s - t)",
        den: "(b1 + 2 s - 1) (b1 + 2 s) (b2 + 2 t) (b2 + 2 t + 1)",
        shift: [-1, 1],
    },
    StencilTermText {
        num: "-(b1 + s) (b1 - b0 + s) (s - t) (s - t + 1) (b2 + N + t) (b2 - b3 - N + t)",
        den: "(b1 + 2 s) (b1 + 2 s + 1) (b2 + 2 t - 1) (b2 + 2 t)",
        shift: [1, -1],
    },
    StencilTermText {
        num: "-s (b0 + s) (b2 + N + t) (b2 - b3 - N + t) (b1 + s + t - 1) (b1 + s + t)",
        den: "(b1 + 2 s - 1) (b1 + 2 s) (b2 + 2 t - 1) (b2 + 2 t)",
        shift: [-1, -1],
    },
    StencilTermText {
        num: "-s (b0 + s) ((b2 + 1) (b3 - 1) + 2 N^2 + 2 b3 N + 2 t^2 + 2 b2 t) (b1 + s + t) (b1 - b2 + s - t)",
        den: "(b1 + 2 s - 1) (b1 + 2 s) (b2 + 2 t - 1) (b2 + 2 t + 1)",
        shift: [-1, 0],
    },
    StencilTermText {
        num: "((b0 + 1) (b1 - 1) + 2 s^2 + 2 b1 s) (s - t) (b2 + N + t) (b2 - b3 - N + t) (b1 + s + t)",
        den: "(b1 + 2 s - 1) (b1 + 2 s + 1) (b2 + 2 t - 1) (b2 + 2 t)",
        shift: [0, -1],
    },
];

/// Shifts (in units of the imaginary unit) for F1..F9 of the Wilson and continuous Hahn forms.
pub const NINE_POINT_SHIFTS: [[i64; 2]; 9] =
    [[1, 1], [1, -1], [-1, 1], [-1, -1], [1, 0], [0, 1], [-1, 0], [0, -1], [0, 0]];

/// Wilson F1..F8 as (numerator, denominator); F9 adds the eigenvalue to its fraction.
pub const WILSON_FORM: [(&str, &str); 9] = [
    ("f1 - x y f4 + i (x f2 + y f3)", "4 x (2 x + i) y (2 y + i)"),
    ("-(f1 + x y f4 + i (x f2 - y f3))", "4 x (2 x + i) y (-2 y + i)"),
    ("-f1 - x y f4 + i (x f2 - y f3)", "4 x (-2 x + i) y (2 y + i)"),
    ("-(-f1 + i f2 x + i f3 y + f4 y x)", "4 (-2 y + i) y (-2 x + i) x"),
    (
        "-i (i f3 - 2 f2 x + 2 i f1 - 4 f7 x y^2 - f7 x - f4 x + 4 i f5 y^2 + i f5)",
        "2 (2 x + i) x (2 y + i) (-2 y + i)",
    ),
    (
        "-i (4 i f6 x^2 + i f6 + i f2 - 4 f8 y x^2 - f8 y - f4 y - 2 f3 y + 2 i f1)",
        "2 (2 y + i) y (2 x + i) (-2 x + i)",
    ),
    (
        "i (2 i f1 + f4 x + i f3 + 4 i f5 y^2 + i f5 + 2 f2 x + 4 f7 x y^2 + f7 x)",
        "2 (-2 x + i) x (2 y + i) (-2 y + i)",
    ),
    (
        "i (2 i f1 + 4 i f6 x^2 + i f6 + f4 y + i f2 + 2 f3 y + 4 f8 y x^2 + f8 y)",
        "2 (-2 y + i) y (2 x + i) (-2 x + i)",
    ),
    (
        "4 f1 + f8 (4 x^2 + 1) + f7 (4 y^2 + 1) + f6 (8 x^2 + 2) + f4 + 2 (f2 + f3) + f5 (8 y^2 + 2)",
        "(2 y + i) (-2 y + i) (2 x + i) (-2 x + i)",
    ),
];

/// Continuous Hahn F1..F9; `lambda` is the eigenvalue.
pub const CH_FORM: [&str; 9] = [
    "f1 + (i/2) (f2 + f3) - (1/4) f4",
    "f1 + (i/2) (f2 - f3) + (1/4) f4",
    "f1 - (i/2) (f2 - f3) + (1/4) f4",
    "f1 - (i/2) (f2 + f3) - (1/4) f4",
    "-2 f1 - f5 - i f2 - (1/2) i f7",
    "-2 f1 - i f3 - f6 - (1/2) i f8",
    "-2 f1 + i f2 - f5 + (1/2) i f7",
    "i f3 - 2 f1 - f6 + (1/2) i f8",
    "4 f1 + 2 f6 + 2 f5 + lambda",
];
