//! Modules over kS₃: decomposition of the regular module and of a tensor
//! square, and hom dimensions computed two ways.

use crossext::groups::CayleyGroup;
use crossext::hopf::group_algebra;
use crossext::linalg::Tolerance;
use crossext::repth::{decompose_module, hom_dim_by_integral, hom_space, regular_module, simple_modules, tensor_modules};

fn main() {
    let tol = Tolerance::default();
    let h = group_algebra(&CayleyGroup::symmetric(3));
    let reg = regular_module(&h);
    for (m, mult) in decompose_module(&h, &reg, 0, &tol).unwrap() {
        println!("regular: dim {} with multiplicity {mult}", m.dim());
    }
    let simples = simple_modules(&h, 0, &tol).unwrap();
    let v = simples.last().unwrap();
    let vv = tensor_modules(&h, v, v);
    let parts: Vec<(usize, usize)> = decompose_module(&h, &vv, 0, &tol).unwrap().iter().map(|(m, k)| (m.dim(), *k)).collect();
    println!("V ⊗ V as (dim, multiplicity): {parts:?}");
    for s in &simples {
        println!("dim Hom(V_{}, V⊗V): nullspace {}, integral {}", s.dim(), hom_space(&h, s, &vv, &tol).unwrap(), hom_dim_by_integral(&h, s, &vv, &tol).unwrap());
    }
}
