#include "hocalc/random.hpp"

#include "hocalc/lifting.hpp"

namespace hocalc {

CellComplex random_complex(std::shared_ptr<const BoundaryStructure> boundary, std::mt19937_64& rng,
                           int points, int cells) {
  const auto& sup = boundary->support();
  ComplexEvaluation e(boundary);
  for (int i = 0; i < points; ++i) e.attach(Cell{sup.point(), {}, ""});
  for (int i = 0; i < cells; ++i) {
    const ShapeId m = std::uniform_int_distribution<ShapeId>(1, sup.size() - 1)(rng);
    const auto tuples = boundary_tuples(e.precat(), *boundary, m);
    if (tuples.empty()) continue;
    const auto& t = tuples[std::uniform_int_distribution<std::size_t>(0, tuples.size() - 1)(rng)];
    Cell c{m, {}, ""};
    for (Elem w : t) c.attachment.push_back(e.origin(*boundary->face_source(m), w));
    e.attach(std::move(c));
  }
  return e.complex();
}

}  // namespace hocalc
