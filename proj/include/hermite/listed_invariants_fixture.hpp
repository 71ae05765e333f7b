#pragma once

namespace hermite {

// Degree listings of low-degree finite-field invariants with their expected
// determinant-span verdicts; mirrored at data/sec6_invariants.json.
inline constexpr const char* kListedInvariantsJson = R"fixture(
{
  "polynomials": [
    {
      "id": "F2-d3-1",
      "field": "Fp:2",
      "degree": 3,
      "in_closure_span": false,
      "text": "A_{2,2} A_{1,1}^2+A_{2,2}^2 A_{1,1}+A_{1,2} A_{2,1}^2+A_{1,2}^2 A_{2,1}"
    },
    {
      "id": "F2-d4-1",
      "field": "Fp:2",
      "degree": 4,
      "in_closure_span": false,
      "text": "A_{1,1}^4+A_{2,2} A_{1,1}^3+A_{1,2}^2 A_{1,1}^2+A_{2,1}^2 A_{1,1}^2+A_{1,2} A_{2,1} A_{1,1}^2+A_{1,2} A_{2,2} A_{1,1}^2+A_{2,1} A_{2,2} A_{1,1}^2+A_{2,2}^3A_{1,1}+A_{1,2} A_{2,1}^2 A_{1,1}+A_{1,2} A_{2,2}^2 A_{1,1}+A_{2,1} A_{2,2}^2A_{1,1}+A_{1,2}^2 A_{2,1} A_{1,1}+A_{1,2}^2 A_{2,2} A_{1,1}+A_{2,1}^2 A_{2,2} A_{1,1}+A_{1,2} A_{2,1} A_{2,2} A_{1,1}+A_{1,2}^4+A_{2,1}^4+A_{2,2}^4+A_{1,2}A_{2,1}^3+A_{1,2}^2 A_{2,2}^2+A_{2,1}^2 A_{2,2}^2+A_{1,2} A_{2,1} A_{2,2}^2+A_{1,2}^3A_{2,1}+A_{1,2} A_{2,1}^2 A_{2,2}+A_{1,2}^2 A_{2,1} A_{2,2}"
    },
    {
      "id": "F3-d4-1",
      "field": "Fp:3",
      "degree": 4,
      "in_closure_span": true,
      "text": "A_{1,2}^2 A_{2,1}^2+A_{1,1} A_{1,2} A_{2,2} A_{2,1}+A_{1,1}^2 A_{2,2}^2"
    },
    {
      "id": "F2-d5-1",
      "field": "Fp:2",
      "degree": 5,
      "in_closure_span": false,
      "text": "A_{2,2}^2 A_{1,1}^3+A_{2,2}^3 A_{1,1}^2+A_{1,2} A_{2,1} A_{2,2} A_{1,1}^2+A_{1,2} A_{2,1} A_{2,2}^2 A_{1,1}+A_{1,2} A_{2,1}^2 A_{2,2} A_{1,1}+A_{1,2}^2 A_{2,1} A_{2,2} A_{1,1}+A_{1,2}^2A_{2,1}^3+A_{1,2}^3 A_{2,1}^2"
    },
    {
      "id": "F2-d5-2",
      "field": "Fp:2",
      "degree": 5,
      "in_closure_span": false,
      "text": "A_{2,2} A_{1,1}^4+A_{2,2}^4 A_{1,1}+A_{1,2} A_{2,1}^4+A_{1,2}^4 A_{2,1}"
    },
    {
      "id": "F2-d6-1",
      "field": "Fp:2",
      "degree": 6,
      "in_closure_span": false,
      "text": "A_{2,2} A_{1,1}^5+A_{1,2}^2 A_{1,1}^4+A_{1,2} A_{2,1} A_{1,1}^4+A_{1,2} A_{2,2} A_{1,1}^4+A_{2,1} A_{2,2}^2 A_{1,1}^3+A_{2,1}^2 A_{2,2} A_{1,1}^3+A_{1,2}^4 A_{1,1}^2+A_{1,2} A_{2,1}^3A_{1,1}^2+A_{1,2} A_{2,2}^3 A_{1,1}^2+A_{1,2} A_{2,1}^2 A_{2,2} A_{1,1}^2+A_{2,2}^5 A_{1,1}+A_{2,1} A_{2,2}^4 A_{1,1}+A_{1,2}^2 A_{2,1}^3 A_{1,1}+A_{1,2}^2 A_{2,2}^3 A_{1,1}+A_{1,2}^2 A_{2,1}A_{2,2}^2 A_{1,1}+A_{1,2}^4 A_{2,1} A_{1,1}+A_{1,2}^4 A_{2,2} A_{1,1}+A_{2,1}^4 A_{2,2} A_{1,1}+A_{1,2} A_{2,1}^5+A_{2,1}^2 A_{2,2}^4+A_{1,2} A_{2,1} A_{2,2}^4+A_{2,1}^4 A_{2,2}^2+A_{1,2}^3A_{2,1} A_{2,2}^2+A_{1,2}^5 A_{2,1}+A_{1,2} A_{2,1}^4 A_{2,2}+A_{1,2}^3 A_{2,1}^2 A_{2,2}"
    },
    {
      "id": "F2-d6-2",
      "field": "Fp:2",
      "degree": 6,
      "in_closure_span": false,
      "text": "A_{2,2} A_{1,1}^5+A_{2,1}^2 A_{1,1}^4+A_{1,2} A_{2,1} A_{1,1}^4+A_{2,1} A_{2,2} A_{1,1}^4+A_{1,2} A_{2,2}^2 A_{1,1}^3+A_{1,2}^2 A_{2,2} A_{1,1}^3+A_{2,1}^4 A_{1,1}^2+A_{2,1} A_{2,2}^3A_{1,1}^2+A_{1,2}^3 A_{2,1} A_{1,1}^2+A_{1,2}^2 A_{2,1} A_{2,2} A_{1,1}^2+A_{2,2}^5 A_{1,1}+A_{1,2} A_{2,1}^4 A_{1,1}+A_{1,2} A_{2,2}^4 A_{1,1}+A_{2,1}^2 A_{2,2}^3 A_{1,1}+A_{1,2}^3 A_{2,1}^2A_{1,1}+A_{1,2} A_{2,1}^2 A_{2,2}^2 A_{1,1}+A_{1,2}^4 A_{2,2} A_{1,1}+A_{2,1}^4 A_{2,2} A_{1,1}+A_{1,2} A_{2,1}^5+A_{1,2}^2 A_{2,2}^4+A_{1,2} A_{2,1} A_{2,2}^4+A_{1,2}^4 A_{2,2}^2+A_{1,2}A_{2,1}^3 A_{2,2}^2+A_{1,2}^5 A_{2,1}+A_{1,2}^2 A_{2,1}^3 A_{2,2}+A_{1,2}^4 A_{2,1} A_{2,2}"
    },
    {
      "id": "F2-d6-3",
      "field": "Fp:2",
      "degree": 6,
      "in_closure_span": false,
      "text": "A_{2,2}^2 A_{1,1}^4+A_{2,2}^4 A_{1,1}^2+A_{1,2}^2 A_{2,1}^4+A_{1,2}^4 A_{2,1}^2"
    },
    {
      "id": "F2-d6-4",
      "field": "Fp:2",
      "degree": 6,
      "in_closure_span": false,
      "text": "A_{2,1}^2 A_{1,1}^4+A_{2,1} A_{2,2} A_{1,1}^4+A_{2,2}^3 A_{1,1}^3+A_{2,1} A_{2,2}^2 A_{1,1}^3+A_{2,1}^2 A_{2,2} A_{1,1}^3+A_{2,1}^4 A_{1,1}^2+A_{1,2} A_{2,1}^3 A_{1,1}^2+A_{1,2} A_{2,2}^3A_{1,1}^2+A_{1,2}^2 A_{2,1}^2 A_{1,1}^2+A_{1,2}^2 A_{2,2}^2 A_{1,1}^2+A_{2,1}^2 A_{2,2}^2 A_{1,1}^2+A_{1,2}^2 A_{2,1} A_{2,2} A_{1,1}^2+A_{1,2} A_{2,1}^4 A_{1,1}+A_{1,2} A_{2,2}^4A_{1,1}+A_{1,2}^2 A_{2,1}^3 A_{1,1}+A_{1,2}^2 A_{2,2}^3 A_{1,1}+A_{1,2} A_{2,1}^2 A_{2,2}^2 A_{1,1}+A_{1,2}^2 A_{2,2}^4+A_{1,2}^3 A_{2,1}^3+A_{1,2}^4 A_{2,2}^2+A_{1,2}^2 A_{2,1}^2A_{2,2}^2+A_{1,2}^3 A_{2,1} A_{2,2}^2+A_{1,2}^3 A_{2,1}^2 A_{2,2}+A_{1,2}^4 A_{2,1} A_{2,2}"
    },
    {
      "id": "F3-d6-1",
      "field": "Fp:3",
      "degree": 6,
      "in_closure_span": false,
      "text": "A_{2,2}^2 A_{1,1}^4+2 A_{1,2} A_{2,1} A_{2,2} A_{1,1}^3+A_{2,2}^4 A_{1,1}^2+2 A_{1,2} A_{2,1} A_{2,2}^3 A_{1,1}+2 A_{1,2} A_{2,1}^3 A_{2,2} A_{1,1}+2 A_{1,2}^3 A_{2,1} A_{2,2} A_{1,1}+A_{1,2}^2A_{2,1}^4+A_{1,2}^4 A_{2,1}^2"
    }
  ]
}
)fixture";

} // namespace hermite
