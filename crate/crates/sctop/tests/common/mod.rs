#![allow(dead_code)]

/// Well-formed documents, deliberately written in assorted layouts.
pub const CORPUS: [&str; 30] = [
    "finite { elems: a }",
    "finite { elems: }",
    "finite{elems:a,b}",
    "finite { elems: a, b; leq: a < b }",
    "finite { elems: a, b; leq: a <= b; }",
    "finite { elems: a, b, t; leq: a < t, b < t }",
    "finite { elems: bot, a, b; leq: bot < a, bot < b }",
    "finite { elems: x0, x1, x2, x3; leq: x0 < x1, x1 < x2, x2 < x3, x0 < x3 }",
    "finite { elems: a, b, u, v; leq: a < u, a < v, b < u, b < v }",
    "# diamond\nfinite {\n  elems: 0, l, r, 1;\n  leq: 0 < l, 0 < r, l < 1, r < 1\n}\n",
    "finite { elems: p', p'', q.1; leq: p' < q.1 }",
    "finite { elems: a, b, c, d, e; leq: a < c, b < c, c < d, c < e }",
    "finite { elems: a; leq: a <= a }",
    "lift(finite { elems: a, b })",
    "lift(lift(finite { elems: x }))",
    "lift(finite { elems: bot })",
    "sum(finite { elems: a }, finite { elems: a, b; leq: a < b })",
    "sum(lift(finite { elems: a, b }), finite { elems: c })",
    "omega",
    "omega_plus_one",
    "nat_cofinite",
    "nat_antichain",
    "johnstone(scott)",
    "johnstone(alex)",
    "johnstone",
    "map { from: finite { elems: a, b; leq: a < b }; to: finite { elems: x }; pairs: a -> x, b -> x }",
    "map{from:finite{elems:a,b;leq:a<=b;};to:finite{elems:x,y;leq:x<y};pairs:a->x,b->y;}",
    "map { from: finite { elems: }; to: finite { elems: z }; pairs: }",
    "map { from: lift(finite { elems: a }); to: finite { elems: s, t; leq: s < t }; pairs: bot -> s, a -> t }",
    "# comment first\nmap {\n  from: sum(finite { elems: a }, finite { elems: b });\n  to: finite { elems: y };\n  pairs: l.a -> y, r.b -> y   # trailing comment\n}",
];

/// Malformed documents with the position (line, column) of the reported error.
pub const MALFORMED: [(&str, usize, usize); 16] = [
    ("", 1, 1),
    ("finite", 1, 1),
    ("finite { elems: a, }", 1, 20),
    ("finite { elems: a b }", 1, 19),
    ("finite { elems: a; leq: a < ? }", 1, 29),
    ("finite { elems: a, a }", 1, 20),
    ("finite { elems: a; leq: a < b }", 1, 29),
    ("finite { elems: a; leq: a < a }", 1, 25),
    ("finite { elems: a, b; leq: a < b, b < a }", 1, 35),
    ("finite {\n  elems: a;\n  leq: a <= z\n}", 3, 13),
    ("lift(omega)", 1, 6),
    ("sum(finite { elems: a })", 1, 24),
    ("frobnicate", 1, 1),
    ("johnstone(sideways)", 1, 11),
    ("map { from: finite { elems: a, b }; to: finite { elems: x }; pairs: a -> x }", 1, 62),
    ("finite { elems: a } trailing", 1, 21),
];

pub const JOIN: &str = "finite { elems: a, b, t; leq: a < t, b < t }";
