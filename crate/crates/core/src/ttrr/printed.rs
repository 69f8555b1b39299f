//! Closed forms for the entries of S_n and T_n, as formula text in k, n and
//! the family parameters. Entry names follow the 1-based (row, column) labels.

pub struct SnTnText {
    pub s_kk: &'static str,
    pub s_k1k: &'static str,
    pub t_kk: &'static str,
    pub t_k1k: &'static str,
    pub t_k2k: &'static str,
}

pub const RACAH: SnTnText = SnTnText {
    s_kk: "-(1/16) (k - n - 1) (-b3 + 8 b1 (2 (k + n - k n + N^2 - 1) + b1 (n - 1))
        + b0 (-4 b1^2 + 8 b1 (k - n) - 4 (k - 3 n) (k + n) + 16 b3 (n - N - 1) - 32 n - 16 N^2 + 17)
        + 16 N^2 (n - k) + 4 b3 (b1 - k + n) (b1 - k - 3 n + 4 N + 4)
        - 2 (n - 1) (-4 (k - 2) k + 4 (n - 2) n + 1))",
    s_k1k: "(1/16) k (-13 b3 + 4 b3 (k^2 + b2 (b2 - 2 k + 4 N + 2) - 2 k (2 N + 1) - 4 (n^2 - 2 n (N + 1) + N))
        + 8 b2 (2 (-k n + k + (n - 1) n + N^2) + b2 (n - 1))
        + b0 (-4 b2^2 + 8 b2 (k - 2 n + 1) - 4 k (k - 4 n + 2) + 16 b3 (n - N - 1) - 16 n - 16 N^2 + 13)
        - 16 N^2 (k - 2 n + 1) + 2 (n - 1) (4 k (k - 2 n) + 8 n - 5))",
    t_kk: "-(1/256) (n - k) (n - k + 1) (-2 b1 + 2 k - 2 n + 1) (4 b0 - 2 b1 + 2 k - 2 n + 1)
        (-2 b1 + 2 k + 2 n - 4 N - 5) (-2 b1 + 4 b3 + 2 k + 2 n + 4 N - 5)",
    t_k2k: "-(1/256) k (k + 1) (-2 b2 + 2 k - 4 n + 5) (4 b0 - 2 b2 + 2 k - 4 n + 5) (-2 b2 + 2 k - 4 N - 1)
        (-2 b2 + 4 b3 + 2 k + 4 N - 1)",
    t_k1k: "(1/128) k (k - n) (-160 b3
        + 8 b1 (8 b2 (k^2 - k n + b3 (k - 2 N - 1) - 2 N^2 + 1) - 4 b2^2 (b3 + k + n - 2)
            + b3 (-4 k (k - 4 n + 4) - 16 n N - 8 n + 16 N + 5) + k (-4 k (k - 3 n + 2) - 16 n + 13)
            - 16 n N^2 + 5 n + 16 N^2 - 2)
        + 4 b2 (2 (-4 k^3 + 8 k^2 + k (4 n (3 n - 8) + 16 N^2 + 13) - 2 (n - 1) (4 (n - 2) n + 8 N^2 + 1))
            + b2 (8 k n + 4 (k - 4) k - 12 n^2 + 32 n - 21))
        + 8 b0 (-26 b3 + 4 k^3 + b2 (-4 k^2 - 8 k (n - 2) + 4 b2 (2 n - 3) + 12 (n - 2) n + 16 N^2 + 5)
            + 4 b3 (2 k^2 - 2 k (n + 2 N) + b2 (b2 - 2 k + 4 N + 2) + n (8 N - 3 n + 10) - 8 N)
            - 8 k^2 + 4 b1^2 (b3 - b2 + k - 1) - 12 k n^2 - 8 b1 (-b2 + b3 + k - 1) (k - n + 1)
            - 16 N^2 (k - 2 n + 2) + 32 k n - 13 k + 12 n^2 - 34 n + 20)
        + 8 b3 (4 k^3 - 4 k^2 (3 n + 2 N - 2) - 4 b2 (k - n + 1) (-b2 + 2 k - 4 N - 2)
            + k (32 (n - 1) N + 16 n - 13) + n (4 n (2 n - 6 N - 9) + 48 N + 47) - 26 N)
        + 4 (4 k^4 - 8 k^3 n - 2 k^2 (6 (n - 4) n + 8 N^2 + 13) + 2 k (32 (n - 1) N^2 + n (8 (n - 3) n + 13))
            + n ((63 - 16 n) n - 48 (n - 2) N^2))
        + 4 b1^2 (4 b2^2 - 8 b2 (k - 2 n + 2) + 4 k (k - 4 n + 4) + 8 b3 (-2 n + 2 N + 3) + 16 n + 16 N^2 - 21)
        - 304 n - 208 N^2 + 121)",
};

pub const WILSON: SnTnText = SnTnText {
    s_kk: "(1/6) (-k + n + 1) (6 (k - 1) (n - k) (2 a + 2 b + c + d + 2 e2 + 1)
        + (4 k - 4 n + 1) (k - n) (a + b + c + d + 2 e2)
        + 6 (n - k) (e2 (2 a + 2 b + c + d + e2) + a (b + c + d) + b (c + d) + c d)
        + 6 (k - 1) (a (2 b + c + d + 1) + 2 e2 (a + b) + b (c + d + 1))
        + 6 (e2 (a (2 b + c + d) + e2 (a + b) + b (c + d)) + a d (b + c) + a b c + b c d)
        + 6 (k - 2) (k - 1) (a + b) + 2 (n - k) (k (2 n - 5) + (n - 5) n + 7))",
    s_k1k: "(1/6) k (2 e2 (3 a (c + d + k - 1) + 3 b (c + d + k - 1) + 3 e2 (c + d + k - 1) + 6 n (c + d + k - 1)
            + 6 c d - 6 c - 6 d - 2 k^2 - 3 k + 5)
        + a (6 b (c + d + k - 1) + 6 c (d + n - 1) + 6 n (d + k - 1) - 6 d - 2 k^2 - 3 k + 5)
        + b (6 c (d + n - 1) + 6 d (n - 1) - (k - 1) (2 k - 6 n + 5))
        + 6 n^2 (c + d + k - 1) - 2 n (-6 c (d - 1) + 6 d + (k - 1) (2 k + 5))
        - (k + 1) (2 k (c + d - 2) + 6 c d - 5 c - 5 d + 4))",
    t_kk: "(1/180) (n - k) (-k + n + 1) (6 (k - n + 1) (4 k^2 + k (5 - 8 n) + n (4 n - 5) - 1) (a + b + c + d + 2 e2)
        - 60 (k - 1) (k - n) (k - n + 1) (2 a + 2 b + c + d + 2 e2 + 1)
        + 30 (k - 1) (4 k - 4 n + 1) (a (2 b + c + d + 1) + 2 e2 (a + b) + b (c + d + 1))
        - 60 (k - n) (k - n + 1) (e2 (2 a + 2 b + c + d + e2) + a (b + c + d) + b (c + d) + c d)
        - 30 (-4 k + 4 n - 1) (e2 (a (2 b + c + d) + e2 (a + b) + b (c + d)) + a d (b + c) + a b c + b c d)
        - 180 a b (k - 1) (c + d + 2 e2 + 1) - 180 a b (c + e2) (d + e2)
        + 30 (k - 2) (k - 1) (a + b) (4 k - 4 n + 1) - 180 a b (k - 2) (k - 1)
        - (k - n + 1) (20 k^3 + 12 k^2 (n - 14) + k (205 - 24 (n - 4) n) + n (-8 (n - 9) n - 193) - 18))",
    t_k1k: "(1/18) k (n - k) (6 e2 (-3 e2 (c + d + k - 1) (a + b - k + n - 1)
            + a (-6 b (c + d + k - 1) - 6 n (c + d + k - 1) - 6 c d + 9 c + 9 d + 2 k^2 + 6 k - 8)
            + b (-6 n (c + d + k - 1) - 6 c d + 9 c + 9 d + 2 k^2 + 6 k - 8)
            + (k - n + 1) (2 c (3 d + k + 2 n - 4) + 2 d (k + 2 n - 4) + (k - 1) (4 n - 7)))
        + 3 a (-2 b (3 k (c + d - 2) + 6 c d - 6 c - 6 d + k^2 + 5) - 6 b n (c + d + k - 1) - 4 n^2 (c + d + k - 1)
            + n (-4 k (c + d) + 3 c (5 - 4 d) + 15 d + 13 (k - 1)) + 6 c d k + 12 c d + 4 c k^2 - 10 c
            + 4 d k^2 - 10 d + 2 k^3 - 5 k^2 - 5 k + 8)
        + 3 b (c (6 d (k - 2 n + 2) + 4 k^2 - 4 k n + (15 - 4 n) n - 10) + d (4 k^2 - 4 k n + (15 - 4 n) n - 10)
            + (k - 1) (k (2 k - 3) + (13 - 4 n) n - 8))
        - (k - n + 1) (3 c (2 d (k - 4 n + 5) - 4 k n + k (2 k + 3) - 2 n^2 + 10 n - 8)
            + 3 d (-4 k n + k (2 k + 3) - 2 n^2 + 10 n - 8) + (k - 1) (4 k^2 - 4 k n - 6 n^2 + 26 n - 19)))",
    t_k2k: "(1/180) k (k + 1) (180 c d (k - n + 1) (a + b + 2 e2 + 1)
        + 60 (k - 1) k (k - n + 1) (a + b + 2 c + 2 d + 2 e2 + 1)
        + 30 (4 k - 1) (k - n + 1) (c (a + b + 2 d + 1) + d (a + b + 1) + 2 e2 (c + d))
        - 6 (k - 1) (k (4 k - 5) - 1) (a + b + c + d + 2 e2)
        - 60 (k - 1) k (e2 (a + b + 2 (c + d) + e2) + a (b + c + d) + b (c + d) + c d)
        - 30 (4 k - 1) (e2 (d (a + b + 2 c) + c (a + b) + e2 (c + d)) + a d (b + c) + a b c + b c d)
        - 180 c d (a + e2) (b + e2) - 180 c d (k - n + 1) (k - n + 2)
        - 30 (4 k - 1) (c + d) (k - n + 1) (k - n + 2)
        - (k - 1) (20 k^3 + 24 k^2 (7 - 3 n) + 5 k (12 (n - 4) n + 41) - 12 n + 18))",
};

pub const CDH: SnTnText = SnTnText {
    s_kk: "-(1/6) (k - n - 1) (6 e2 (2 a + b + c + e2 + 2 n - 2) + 6 a (b + c + k + n - 2) + 6 b (c + n - 1)
        + n (6 c + 4 k - 13) - 6 c - 2 k^2 + k + 4 n^2 + 6)",
    s_k1k: "(1/6) k (6 a (b + c + k - 1) + 6 e2 (b + c + k - 1) + 6 b (c + n - 1) + 6 n (c + k - 1) - 6 c - 2 k^2 - 3 k + 5)",
    t_kk: "(1/30) (n - k) (n - k + 1) (-10 (k - n) (k - n + 1) (a + b + c + 2 e2)
        + 5 (k - 1) (4 k - 4 n + 1) (2 a + b + c + 2 e2 + 1)
        - 5 (-4 k + 4 n - 1) (e2 (2 a + b + c + e2) + a (b + c) + b c)
        - 30 a (k - 1) (b + c + 2 e2 + 1) - 30 a (b + e2) (c + e2) - 30 a (k - 2) (k - 1)
        + 4 k^3 + 8 k^2 n - 46 k^2 - 8 k n^2 + 22 k n + 49 k - 4 n^3 + 29 n^2 - 64 n + 9)",
    t_k1k: "-(1/6) k (k - n) (2 e2 (-6 a (b + c + k - 1) - 3 e2 (b + c + k - 1) - 6 n (b + c + k - 1) - 6 b c
            + 9 b + 9 c + 2 k^2 + 6 k - 8)
        - 2 a (3 k (b + c - 2) + 6 b c - 6 b - 6 c + k^2 + 5) - 6 a n (b + c + k - 1)
        - 4 n^2 (b + c + k - 1) + n (-4 k (b + c) + 3 b (5 - 4 c) + 15 c + 13 (k - 1)) + 6 b c k + 12 b c + 4 b k^2
        - 10 b + 4 c k^2 - 10 c + 2 k^3 - 5 k^2 - 5 k + 8)",
    t_k2k: "(1/30) k (k + 1) (-10 (k - 1) k (a + b + c + e2) - 5 (4 k - 1) (a (b + c) + e2 (b + c) + b c)
        - 30 b c (a + e2) + 30 b c (k - n + 1) + 5 (4 k - 1) (b + c) (k - n + 1)
        + (k - 1) (k (6 k - 10 n + 15) + 1))",
};

/// The last bracket of t_{k+2,k} reads "(4n − 3k + −6)"; `CH_T_K2K_READINGS` holds both candidates.
pub const CH: SnTnText = SnTnText {
    s_kk: "(1/2) i (n - k + 1) (2 (a1 (b3 + e2) - b1 (a3 + e2)) + (a1 - a3 - b1 + b3) (n - k) + 2 (k - 1) (a1 - b1))",
    s_k1k: "(1/2) i k (a3 (-2 b1 - 2 e2 + k - 2 n + 1) + a1 (2 b3 + k - 1) + 2 b3 e2 - b1 k - b3 k + 2 b3 n + b1 - b3)",
    t_kk: "(1/12) (n - k) (n - k + 1) (-2 (k - n + 1) (a1 + a3 + b1 + b3 + 2 e2) + 6 (b1 (a3 + e2) + a1 (b3 + e2))
        + 6 (k - 1) (a1 + b1) - (k - n + 1) (3 k + n - 6))",
    t_k1k: "(1/2) k (n - k) ((a3 + b3) (n - k - 1) + (k - 1) (a1 + b1) + 2 (a3 b1 + a1 b3) + (k - 1) (n - k - 1))",
    t_k2k: CH_T_K2K_READINGS[0],
};

pub const CH_T_K2K_READINGS: [&str; 2] = [
    "(1/12) k (k + 1) (2 (k - 1) (a1 + a3 + b1 + b3 + 2 e2) + 6 (b3 (a1 + e2) + a3 (b1 + e2))
        - 6 (a3 + b3) (k - n + 1) + (k - 1) (4 n - 3 k - 6))",
    "(1/12) k (k + 1) (2 (k - 1) (a1 + a3 + b1 + b3 + 2 e2) + 6 (b3 (a1 + e2) + a3 (b1 + e2))
        - 6 (a3 + b3) (k - n + 1) + (k - 1) (4 n - 3 k + 6))",
];
