//! Example matrices shared by unit tests.

use crate::matrix::SquareMatrix;

pub(crate) fn a1() -> SquareMatrix {
    SquareMatrix::from_rows(&[
        [-7.0, 1.0, -0.2, 2.0],
        [7.0, 88.0, 2.0, -3.0],
        [2.0, 0.5, 13.0, -2.0],
        [0.5, 3.0, 1.0, 6.0],
    ])
    .unwrap()
}

pub(crate) fn a2() -> SquareMatrix {
    SquareMatrix::from_rows(&[
        [8.0, 1.0, -0.2, 3.3],
        [7.0, 13.0, 2.0, -3.0],
        [-1.3, 6.7, 13.0, -2.0],
        [0.5, 3.0, 1.0, 6.0],
    ])
    .unwrap()
}

pub(crate) fn a3() -> SquareMatrix {
    SquareMatrix::from_rows(&[
        [21.0, -9.1, -4.2, -2.1],
        [-0.7, 9.1, -4.2, -2.1],
        [-0.7, -0.7, 4.9, -2.1],
        [-0.7, -0.7, -0.7, 2.8],
    ])
    .unwrap()
}

pub(crate) fn a4() -> SquareMatrix {
    SquareMatrix::from_rows(&[
        [5.0, 1.0, 0.2, 2.0],
        [1.0, 21.0, 1.0, -3.0],
        [2.0, 0.5, 6.4, -2.0],
        [0.5, -1.0, 1.0, 9.0],
    ])
    .unwrap()
}

pub(crate) fn a5() -> SquareMatrix {
    SquareMatrix::from_rows(&[[6.0, -3.0, -2.0], [-1.0, 11.0, -8.0], [-7.0, -3.0, 10.0]]).unwrap()
}

pub(crate) fn a6() -> SquareMatrix {
    SquareMatrix::from_rows(&[
        [8.0, -0.5, -0.5, -0.5],
        [-9.0, 16.0, -5.0, -5.0],
        [-6.0, -4.0, 15.0, -3.0],
        [-4.9, -0.9, -0.9, 6.0],
    ])
    .unwrap()
}
