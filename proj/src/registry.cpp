#include "ddc/search.hpp"

namespace ddc {

// The built-in registry of reference DDC codes: splitting, parameters, and the
// recorded facts (parameters, distance, duality, minimum-word counts) that
// tests and reports check against.
const std::vector<ExampleEntry>& example_registry() {
  static const std::vector<ExampleEntry> entries = [] {
    std::vector<ExampleEntry> v;

    ExampleEntry e;

    // n = 15 over GF(2), 4-cyclotomic splitting, witness mu_2.
    e = {};
    e.id = "ex4.1i-pure";
    e.summary = "[30,15,8] optimal; formally self-dual even";
    e.q = 2;
    e.n = 15;
    e.base = 4;
    e.s1 = {1, 3, 4, 5, 7, 12, 13};
    e.kind = CodeKind::pure;
    e.r = 0;
    e.s = 0;
    e.t = 1;
    e.length = 30;
    e.dimension = 15;
    e.distance = 8;
    e.self_dual = false;
    e.formally_self_dual = true;
    e.even_weights = true;
    v.push_back(e);

    e = {};
    e.id = "ex4.1i-bordered";
    e.summary = "[32,16,8] optimal; not formally self-dual";
    e.q = 2;
    e.n = 15;
    e.base = 4;
    e.s1 = {1, 3, 4, 5, 7, 12, 13};
    e.kind = CodeKind::bordered;
    e.alpha = 0;
    e.beta = 1;
    e.gamma = 0;
    e.r = 0;
    e.s = 0;
    e.t = 1;
    e.length = 32;
    e.dimension = 16;
    e.distance = 8;
    e.self_dual = false;
    e.formally_self_dual = false;
    v.push_back(e);

    // n = 17 over GF(2), witness mu_{-2}.
    e = {};
    e.id = "ex4.1ii-pure";
    e.summary = "[34,17,8] optimal; near-extremal formally self-dual even";
    e.q = 2;
    e.n = 17;
    e.base = 4;
    e.s1 = {1, 3, 4, 5, 12, 13, 14, 16};
    e.kind = CodeKind::pure;
    e.r = 1;
    e.s = 0;
    e.t = 1;
    e.length = 34;
    e.dimension = 17;
    e.distance = 8;
    e.self_dual = false;
    e.formally_self_dual = true;
    e.even_weights = true;
    v.push_back(e);

    e = {};
    e.id = "ex4.1ii-bordered";
    e.summary = "[36,18,8] optimal; not formally self-dual";
    e.q = 2;
    e.n = 17;
    e.base = 4;
    e.s1 = {1, 3, 4, 5, 12, 13, 14, 16};
    e.kind = CodeKind::bordered;
    e.alpha = 0;
    e.beta = 1;
    e.gamma = 0;
    e.r = 1;
    e.s = 0;
    e.t = 1;
    e.length = 36;
    e.dimension = 18;
    e.distance = 8;
    e.self_dual = false;
    e.formally_self_dual = false;
    v.push_back(e);

    // n = 33 over GF(2), witness mu_{-1}.
    const std::vector<long> s33 = {1, 3, 4, 7, 9, 10, 11, 12, 13, 15, 16, 19, 25, 27, 28, 31};
    e = {};
    e.id = "ex4.1iii-pure";
    e.summary = "[66,33,12] optimal Type I self-dual, A_12 = 858";
    e.q = 2;
    e.n = 33;
    e.base = 4;
    e.s1 = s33;
    e.kind = CodeKind::pure;
    e.r = 1;
    e.s = 0;
    e.t = 1;
    e.length = 66;
    e.dimension = 33;
    e.distance = 12;
    e.min_words = 858;
    e.self_dual = true;
    e.binary_type = BinaryType::type_i;
    v.push_back(e);

    e = {};
    e.id = "ex4.1iii-pure2";
    e.summary = "[66,33,12] best known; formally self-dual odd";
    e.q = 2;
    e.n = 33;
    e.base = 4;
    e.s1 = s33;
    e.kind = CodeKind::pure;
    e.r = 0;
    e.s = 0;
    e.t = 1;
    e.length = 66;
    e.dimension = 33;
    e.distance = 12;
    e.self_dual = false;
    e.formally_self_dual = true;
    e.even_weights = false;
    v.push_back(e);

    e = {};
    e.id = "ex4.1iii-bordered";
    e.summary = "[68,34,12] optimal Type I self-dual, A_12 = 858";
    e.q = 2;
    e.n = 33;
    e.base = 4;
    e.s1 = s33;
    e.kind = CodeKind::bordered;
    e.alpha = 0;
    e.beta = 1;
    e.gamma = 1;
    e.r = 0;
    e.s = 0;
    e.t = 1;
    e.length = 68;
    e.dimension = 34;
    e.distance = 12;
    e.min_words = 858;
    e.self_dual = true;
    e.binary_type = BinaryType::type_i;
    v.push_back(e);

    // n = 41 over GF(2), witness mu_{-2}.
    e = {};
    e.id = "ex4.1iv-pure";
    e.summary = "[82,41,14] best known; formally self-dual even";
    e.q = 2;
    e.n = 41;
    e.base = 4;
    e.s1 = {1, 3, 4, 7, 10, 11, 12, 13, 16, 18, 23, 25, 28, 29, 30, 31, 34, 37, 38, 40};
    e.kind = CodeKind::pure;
    e.r = 1;
    e.s = 0;
    e.t = 1;
    e.length = 82;
    e.dimension = 41;
    e.distance = 14;
    e.self_dual = false;
    e.formally_self_dual = true;
    e.even_weights = true;
    v.push_back(e);

    // n = 43 over GF(2), witness mu_2.
    const std::vector<long> s43 = {1,  3,  4,  5,  7,  11, 12, 16, 18, 19, 20,
                                   21, 26, 28, 29, 30, 33, 34, 35, 37, 41};
    e = {};
    e.id = "ex4.2-pure";
    e.summary = "[86,43,16] optimal Type I self-dual";
    e.q = 2;
    e.n = 43;
    e.base = 4;
    e.s1 = s43;
    e.kind = CodeKind::pure;
    e.r = 0;
    e.s = 1;
    e.t = 0;
    e.length = 86;
    e.dimension = 43;
    e.distance = 16;
    e.self_dual = true;
    e.binary_type = BinaryType::type_i;
    v.push_back(e);

    e = {};
    e.id = "ex4.2-bordered";
    e.summary = "[88,44,16] optimal Type II self-dual";
    e.q = 2;
    e.n = 43;
    e.base = 4;
    e.s1 = s43;
    e.kind = CodeKind::bordered;
    e.alpha = 0;
    e.beta = 1;
    e.gamma = 1;
    e.r = 1;
    e.s = 1;
    e.t = 0;
    e.length = 88;
    e.dimension = 44;
    e.distance = 16;
    e.self_dual = true;
    e.binary_type = BinaryType::type_ii;
    v.push_back(e);

    // n = 37 over GF(3), 9-cyclotomic splitting, witness mu_{-1}.
    e = {};
    e.id = "ex4.3";
    e.summary = "[76,38,18] self-dual over GF(3), A_18 = 79032";
    e.q = 3;
    e.n = 37;
    e.base = 9;
    e.s1 = {1, 2, 7, 9, 10, 12, 14, 15, 16, 18, 20, 24, 26, 29, 31, 32, 33, 34};
    e.kind = CodeKind::bordered;
    e.alpha = 1;
    e.beta = 1;
    e.gamma = 1;
    e.r = 2;
    e.s = 0;
    e.t = 2;
    e.length = 76;
    e.dimension = 38;
    e.distance = 18;
    e.min_words = 79032;
    e.self_dual = true;
    v.push_back(e);

    return v;
  }();
  return entries;
}

}  // namespace ddc
