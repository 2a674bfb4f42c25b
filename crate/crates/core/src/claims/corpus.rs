use crate::presentation::{parse_presentation, Presentation};

const CORPUS: &[&str] = &[
    "group C2 { gens: a; rels: a^2; }",
    "group C3 { gens: a; rels: a^3; }",
    "group C4 { gens: a; rels: a^4; }",
    "group C2xC2 { gens: a, b; rels: a^2, b^2, [a,b]; }",
    "group C6 { gens: a; rels: a^6; }",
    "group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }",
    "group D8 { gens: r, s; rels: r^4, s^2, (s*r)^2; }",
    "group Q8 { gens: a, b; rels: a^4, a^2*b^-2, b^-1*a*b*a; }",
    "group C3xC3 { gens: a, b; rels: a^3, b^3, [a,b]; }",
    "group A4 { gens: a1, a2, t; rels: t^3, t^-1*a1*t*a2^-1, t^-1*a2*t*a2*a1, [a2,a1], a1^2, a2^2; }",
    "group C3xC9 { gens: a, b; rels: a^3, b^9, [a,b]; }",
    "group Heis27 { gens: x, y; rels: x^3, y^3, ([x,y])^3, [x,[x,y]], [y,[x,y]]; }",
];

/// The small finite groups the exact checks run on.
pub fn finite_corpus() -> Vec<Presentation> {
    CORPUS
        .iter()
        .map(|s| parse_presentation(s).expect("corpus presentations parse"))
        .collect()
}
