//! Bernoulli-basis tables: `(algebra, ℓ, [(L, numerator, denominator)])`.

pub type Table = (&'static str, u32, Vec<(Vec<u32>, i64, i64)>);

pub fn tables() -> Vec<Table> {
    vec![
        ("A2", 0, vec![(vec![2, 0], 1, 4), (vec![1, 1], 1, 1), (vec![0, 2], 1, 4)]),
        ("A2", 1, vec![(vec![5, 0], -1, 60), (vec![3, 2], 1, 6), (vec![2, 3], 1, 6), (vec![0, 5], -1, 60)]),
        (
            "A2",
            2,
            vec![(vec![8, 0], 1, 480), (vec![5, 3], 1, 15), (vec![4, 4], 1, 8), (vec![3, 5], 1, 15), (vec![0, 8], 1, 480)],
        ),
        (
            "A3",
            0,
            vec![
                (vec![3, 0, 0], -1, 30),
                (vec![0, 0, 3], -1, 30),
                (vec![2, 1, 0], -1, 6),
                (vec![0, 1, 2], -1, 6),
                (vec![0, 3, 0], -1, 10),
                (vec![1, 2, 0], -1, 3),
                (vec![0, 2, 1], -1, 3),
                (vec![2, 0, 1], -1, 4),
                (vec![1, 0, 2], -1, 4),
                (vec![1, 1, 1], -1, 1),
            ],
        ),
        ("B2", 0, vec![(vec![2, 0], 1, 2), (vec![1, 1], 1, 1), (vec![0, 2], 1, 4)]),
        (
            "B2",
            1,
            vec![(vec![6, 0], -1, 72), (vec![4, 2], 1, 4), (vec![3, 3], 1, 3), (vec![2, 4], 1, 8), (vec![0, 6], -1, 576)],
        ),
        (
            "B2",
            2,
            vec![
                (vec![10, 0], 4, 525),
                (vec![7, 3], 4, 21),
                (vec![6, 4], 1, 2),
                (vec![5, 5], 13, 25),
                (vec![4, 6], 1, 4),
                (vec![3, 7], 1, 21),
                (vec![0, 10], 1, 4200),
            ],
        ),
        (
            "B2",
            3,
            vec![
                (vec![14, 0], -1, 1680),
                (vec![10, 4], 1, 5),
                (vec![9, 5], 4, 5),
                (vec![8, 6], 11, 8),
                (vec![7, 7], 9, 7),
                (vec![6, 8], 11, 16),
                (vec![5, 9], 1, 5),
                (vec![4, 10], 1, 40),
                (vec![0, 14], -1, 215040),
            ],
        ),
        ("G2", 0, vec![(vec![2, 0], 1, 4), (vec![1, 1], 1, 1), (vec![0, 2], 3, 4)]),
        (
            "G2",
            1,
            vec![
                (vec![8, 0], -151, 124416),
                (vec![6, 2], 1, 6),
                (vec![5, 3], 1, 1),
                (vec![4, 4], 5, 2),
                (vec![3, 5], 3, 1),
                (vec![2, 6], 3, 2),
                (vec![0, 8], -151, 1536),
            ],
        ),
        (
            "G2",
            2,
            vec![
                (vec![14, 0], 1, 12936),
                (vec![11, 3], 4, 33),
                (vec![10, 4], 3, 2),
                (vec![9, 5], 77, 9),
                (vec![8, 6], 115, 4),
                (vec![7, 7], 3022, 49),
                (vec![6, 8], 345, 4),
                (vec![5, 9], 77, 1),
                (vec![4, 10], 81, 2),
                (vec![3, 11], 108, 11),
                (vec![0, 14], 729, 4312),
            ],
        ),
        (
            "B3",
            0,
            vec![
                (vec![3, 0, 0], -7, 96),
                (vec![0, 3, 0], -25, 96),
                (vec![0, 0, 3], -1, 24),
                (vec![2, 1, 0], -1, 3),
                (vec![1, 2, 0], -2, 3),
                (vec![2, 0, 1], -1, 4),
                (vec![0, 2, 1], -1, 2),
                (vec![1, 0, 2], -1, 4),
                (vec![0, 1, 2], -1, 4),
                (vec![1, 1, 1], -1, 1),
            ],
        ),
        (
            "C3",
            0,
            vec![
                (vec![3, 0, 0], -7, 192),
                (vec![0, 3, 0], -25, 192),
                (vec![0, 0, 3], -1, 6),
                (vec![2, 1, 0], -1, 6),
                (vec![1, 2, 0], -1, 3),
                (vec![2, 0, 1], -1, 4),
                (vec![0, 2, 1], -1, 2),
                (vec![1, 0, 2], -1, 2),
                (vec![0, 1, 2], -1, 2),
                (vec![1, 1, 1], -1, 1),
            ],
        ),
    ]
}
