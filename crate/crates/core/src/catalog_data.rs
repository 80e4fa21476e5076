//! Permutation generators for every group of order at most 30, keyed by
//! the standard small-group numbering.

pub(crate) struct RawEntry {
    pub order: usize,
    pub id: usize,
    pub name: &'static str,
    pub structure: &'static str,
    pub generators: &'static [&'static str],
}

const fn entry(
    order: usize,
    id: usize,
    name: &'static str,
    structure: &'static str,
    generators: &'static [&'static str],
) -> RawEntry {
    RawEntry { order, id, name, structure, generators }
}

#[rustfmt::skip]
pub(crate) static ENTRIES: &[RawEntry] = &[
    entry(1, 1, "1", "I", &[]),
    entry(2, 1, "C2", "C2", &["(1,2)"]),
    entry(3, 1, "C3", "C3", &["(1,2,3)"]),
    entry(4, 1, "C4", "C4", &["(1,2,3,4)"]),
    entry(4, 2, "C2 x C2", "K4 = C2 x C2", &["(1,2)", "(3,4)"]),
    entry(5, 1, "C5", "C5", &["(1,2,3,4,5)"]),
    entry(6, 1, "S3", "S3", &["(1,2,3)", "(2,3)"]),
    entry(6, 2, "C6", "C6", &["(1,2,3,4,5,6)"]),
    entry(7, 1, "C7", "C7", &["(1,2,3,4,5,6,7)"]),
    entry(8, 1, "C8", "C8", &["(1,2,3,4,5,6,7,8)"]),
    entry(8, 2, "C4 x C2", "C4 x C2", &["(1,2,3,4)", "(5,6)"]),
    entry(8, 3, "D8", "D8", &["(1,2,3,4)", "(2,4)"]),
    entry(8, 4, "Q8", "Q8", &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"]),
    entry(8, 5, "C2 x C2 x C2", "C2 x C2 x C2", &["(1,2)", "(3,4)", "(5,6)"]),
    entry(9, 1, "C9", "C9", &["(1,2,3,4,5,6,7,8,9)"]),
    entry(9, 2, "C3 x C3", "C3 x C3", &["(1,2,3)", "(4,5,6)"]),
    entry(10, 1, "D10", "D10", &["(1,2,3,4,5)", "(2,5)(3,4)"]),
    entry(10, 2, "C10", "C10", &["(1,2,3,4,5,6,7,8,9,10)"]),
    entry(11, 1, "C11", "C11", &["(1,2,3,4,5,6,7,8,9,10,11)"]),
    entry(12, 1, "C3 : C4", "C3 |x C4", &["(1,2,3)", "(2,3)(4,5,6,7)"]),
    entry(12, 2, "C12", "C12", &["(1,2,3,4,5,6,7,8,9,10,11,12)"]),
    entry(12, 3, "A4", "A4", &["(1,2,3)", "(1,2)(3,4)"]),
    entry(12, 4, "D12", "D12", &["(1,2,3,4,5,6)", "(2,6)(3,5)"]),
    entry(12, 5, "C6 x C2", "C3 x K4", &["(1,2,3,4,5,6)", "(7,8)"]),
    entry(13, 1, "C13", "C13", &["(1,2,3,4,5,6,7,8,9,10,11,12,13)"]),
    entry(14, 1, "D14", "D14", &["(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)"]),
    entry(14, 2, "C14", "C14", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14)"]),
    entry(15, 1, "C15", "C15", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)"]),
    entry(16, 1, "C16", "C16", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16)"]),
    entry(16, 2, "C4 x C4", "C4 x C4", &["(1,2,3,4)", "(5,6,7,8)"]),
    entry(16, 3, "(C4 x C2) : C2", "(C4 x C2) |x C2", &["(1,2)", "(1,3)(2,4)(5,6,7,8)"]),
    entry(16, 4, "C4 : C4", "C4 |x C4", &["(1,2,3,4)", "(2,4)(5,6,7,8)"]),
    entry(16, 5, "C8 x C2", "C8 x C2", &["(1,2,3,4,5,6,7,8)", "(9,10)"]),
    entry(16, 6, "C8 : C2", "C8 |x C2", &["(1,2,3,4,5,6,7,8)", "(2,6)(4,8)"]),
    entry(16, 7, "D16", "D16", &["(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"]),
    entry(16, 8, "QD16", "QD16", &["(1,2,3,4,5,6,7,8)", "(2,4)(3,7)(6,8)"]),
    entry(16, 9, "Q16", "Q16", &["(1,2,3,4,5,6,7,8)(9,10,11,12,13,14,15,16)", "(1,9,5,13)(2,16,6,12)(3,15,7,11)(4,14,8,10)"]),
    entry(16, 10, "C4 x C2 x C2", "C4 x K4", &["(1,2,3,4)", "(5,6)", "(7,8)"]),
    entry(16, 11, "C2 x D8", "C2 x D8", &["(1,2)", "(3,4,5,6)", "(4,6)"]),
    entry(16, 12, "C2 x Q8", "C2 x Q8", &["(1,2)", "(3,4,5,6)(7,8,9,10)", "(3,7,5,9)(4,10,6,8)"]),
    entry(16, 13, "(C4 x C2) : C2", "(C4 x C2) |x C2", &["(1,5)(2,6)(3,7)(4,8)", "(5,7)(6,8)", "(1,2,3,4)(5,6,7,8)"]),
    entry(16, 14, "C2 x C2 x C2 x C2", "K4 x K4", &["(1,2)", "(3,4)", "(5,6)", "(7,8)"]),
    entry(17, 1, "C17", "C17", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17)"]),
    entry(18, 1, "D18", "D18", &["(1,2,3,4,5,6,7,8,9)", "(2,9)(3,8)(4,7)(5,6)"]),
    entry(18, 2, "C18", "C18", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18)"]),
    entry(18, 3, "C3 x S3", "C3 x S3", &["(1,2,3)", "(4,5,6)", "(5,6)"]),
    entry(18, 4, "(C3 x C3) : C2", "(C3 x C3) |x C2", &["(1,2,3)", "(4,5,6)", "(2,3)(5,6)"]),
    entry(18, 5, "C6 x C3", "C6 x C3", &["(1,2,3,4,5,6)", "(7,8,9)"]),
    entry(19, 1, "C19", "C19", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19)"]),
    entry(20, 1, "C5 : C4", "Q20", &["(1,2,3,4,5)", "(2,5)(3,4)(6,7,8,9)"]),
    entry(20, 2, "C20", "C20", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20)"]),
    entry(20, 3, "C5 : C4", "C4 |x C5", &["(1,2,3,4,5)", "(2,3,5,4)"]),
    entry(20, 4, "D20", "D20", &["(1,2,3,4,5,6,7,8,9,10)", "(2,10)(3,9)(4,8)(5,7)"]),
    entry(20, 5, "C10 x C2", "C5 x K4", &["(1,2,3,4,5,6,7,8,9,10)", "(11,12)"]),
    entry(21, 1, "C7 : C3", "C3 |x C7", &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
    entry(21, 2, "C21", "C21", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21)"]),
    entry(22, 1, "D22", "D22", &["(1,2,3,4,5,6,7,8,9,10,11)", "(2,11)(3,10)(4,9)(5,8)(6,7)"]),
    entry(22, 2, "C22", "C22", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22)"]),
    entry(23, 1, "C23", "C23", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)"]),
    entry(24, 1, "C3 : C8", "C3 |x C8", &["(1,2,3)", "(2,3)(4,5,6,7,8,9,10,11)"]),
    entry(24, 2, "C24", "C24", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24)"]),
    entry(24, 3, "SL(2,3)", "SL(2,3)", &["(1,4,7)(2,8,5)", "(3,4,5)(6,8,7)"]),
    entry(24, 4, "C3 : Q8", "Q24", &["(1,2,3)", "(2,3)(4,5,6,7)(8,9,10,11)", "(4,8,6,10)(5,11,7,9)"]),
    entry(24, 5, "C4 x S3", "S3 x C4", &["(1,2,3,4)", "(5,6,7)", "(6,7)"]),
    entry(24, 6, "D24", "D24", &["(1,2,3,4,5,6,7,8,9,10,11,12)", "(2,12)(3,11)(4,10)(5,9)(6,8)"]),
    entry(24, 7, "C2 x (C3 : C4)", "Q12 x C2", &["(1,2)", "(3,4,5)", "(4,5)(6,7,8,9)"]),
    entry(24, 8, "(C6 x C2) : C2", "D8 |x C3", &["(5,6,7)", "(1,2,3,4)(6,7)", "(1,3)"]),
    entry(24, 9, "C12 x C2", "C12 x C2", &["(1,2,3,4,5,6,7,8,9,10,11,12)", "(13,14)"]),
    entry(24, 10, "C3 x D8", "D8 x C3", &["(1,2,3)", "(4,5,6,7)", "(5,7)"]),
    entry(24, 11, "C3 x Q8", "Q8 x C3", &["(1,2,3)", "(4,5,6,7)(8,9,10,11)", "(4,8,6,10)(5,11,7,9)"]),
    entry(24, 12, "S4", "S4", &["(1,2,3,4)", "(1,2)"]),
    entry(24, 13, "C2 x A4", "A4 x C2", &["(1,2)", "(3,4,5)", "(3,4)(5,6)"]),
    entry(24, 14, "C2 x C2 x S3", "S3 x K4", &["(1,2)", "(3,4)", "(5,6,7)", "(6,7)"]),
    entry(24, 15, "C6 x C2 x C2", "C6 x K4", &["(1,2,3,4,5,6)", "(7,8)", "(9,10)"]),
    entry(25, 1, "C25", "C25", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25)"]),
    entry(25, 2, "C5 x C5", "C5 x C5", &["(1,2,3,4,5)", "(6,7,8,9,10)"]),
    entry(26, 1, "D26", "D26", &["(1,2,3,4,5,6,7,8,9,10,11,12,13)", "(2,13)(3,12)(4,11)(5,10)(6,9)(7,8)"]),
    entry(26, 2, "C26", "C26", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26)"]),
    entry(27, 1, "C27", "C27", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27)"]),
    entry(27, 2, "C9 x C3", "C9 x C3", &["(1,2,3,4,5,6,7,8,9)", "(10,11,12)"]),
    entry(27, 3, "(C3 x C3) : C3", "(C3 x C3) |x C3", &["(2,5,8)(3,9,6)", "(1,2,3)(4,5,6)(7,8,9)"]),
    entry(27, 4, "C9 : C3", "C9 |x C3", &["(1,2,3,4,5,6,7,8,9)", "(2,5,8)(3,9,6)"]),
    entry(27, 5, "C3 x C3 x C3", "C3 x C3 x C3", &["(1,2,3)", "(4,5,6)", "(7,8,9)"]),
    entry(28, 1, "C7 : C4", "Q28", &["(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)(8,9,10,11)"]),
    entry(28, 2, "C28", "C28", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28)"]),
    entry(28, 3, "D28", "D28", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14)", "(2,14)(3,13)(4,12)(5,11)(6,10)(7,9)"]),
    entry(28, 4, "C14 x C2", "C7 x K4", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14)", "(15,16)"]),
    entry(29, 1, "C29", "C29", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29)"]),
    entry(30, 1, "C5 x S3", "S3 x C5", &["(1,2,3,4,5)", "(6,7,8)", "(7,8)"]),
    entry(30, 2, "C3 x D10", "D10 x C3", &["(1,2,3)", "(4,5,6,7,8)", "(5,8)(6,7)"]),
    entry(30, 3, "D30", "D30", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)", "(2,15)(3,14)(4,13)(5,12)(6,11)(7,10)(8,9)"]),
    entry(30, 4, "C30", "C30", &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30)"]),
];
