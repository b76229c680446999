//! Published corner counts with their lower and upper bounds.

/// `(corner, LB, N, UB)`.
pub const ROWS: [(&[u64], u64, u64, u64); 18] = [
    (&[2, 2], 4, 4, 8),
    (&[3, 2], 6, 10, 24),
    (&[3, 3], 8, 38, 144),
    (&[4, 2], 10, 30, 96),
    (&[4, 3], 22, 203, 1152),
    (&[5, 2], 14, 66, 320),
    (&[6, 2], 22, 199, 1280),
    (&[5, 3], 26, 669, 8448),
    (&[4, 4], 46, 1587, 18432),
    (&[6, 3], 78, 3212, 67584),
    (&[5, 4], 94, 8758, 270336),
    (&[2, 2, 2], 8, 52, 128),
    (&[3, 2, 2], 14, 388, 1536),
    (&[4, 2, 2], 22, 2903, 24576),
    (&[3, 3, 2], 30, 6930, 73728),
    (&[4, 3, 2], 58, 136277, 4718592),
    (&[2, 2, 2, 2], 16, 4382, 32768),
    (&[3, 2, 2, 2], 30, 222734, 6291456),
];
