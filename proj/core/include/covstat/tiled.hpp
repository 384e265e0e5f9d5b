#pragma once

#include "covstat/relator.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace covstat::tiled {

// One octagon, stored by the start vertices of its eight relator steps
// (corner i begins the step reading relator letter i).  Canonical because
// the relator has no cyclic symmetry.
struct Octagon {
  std::array<int, 8> corners;
  friend bool operator==(const Octagon&, const Octagon&) = default;
  friend auto operator<=>(const Octagon&, const Octagon&) = default;
};

// A directed edge-side traversal: edge (letter, tail) walked forward or
// backward.  Forward reads the letter, backward its inverse.
struct Dart {
  int letter;  // base letter 0..3
  int tail;    // tail vertex of the underlying edge
  bool fwd;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct BoundaryCycle {
  std::vector<Dart> darts;
  std::vector<LetterCode> reading;  // letter codes read along the cycle
  std::vector<int> gap;             // hanging slots after dart i (cyclically)
  size_t length() const { return darts.size(); }
};

struct BlockRun {
  int start;    // index of first dart of the run
  int length;
  int rel_pos;  // relator position of the first letter
};

struct CycleClassification {
  std::vector<BlockRun> blocks;
  std::vector<int> junction_gap;  // gap after block i
  bool single_full_run = false;
};

struct BoundaryReport {
  std::vector<CycleClassification> cycles;
  bool has_long_block = false;
  bool has_long_chain = false;
  bool has_half_block = false;
  bool has_half_chain = false;
};

class TiledSurface;

struct Morphism {
  std::vector<int> vmap;  // vertex of Y -> vertex of Z
};

class TiledSurface {
 public:
  TiledSurface() = default;
  explicit TiledSurface(int vertices) { reset(vertices); }

  void reset(int vertices);
  int add_vertex();
  void add_edge(int letter, int u, int v);  // throws on duplicate slots
  bool try_add_edge(int letter, int u, int v);
  // Walk letter code p from v; -1 when the required edge is absent.
  int step(int v, LetterCode p) const;
  int next(int letter, int v) const { return next_[letter][v]; }
  int prev(int letter, int v) const { return prev_[letter][v]; }

  // Adds the octagon whose relator path starts at `start` (all edges must
  // already exist and close up); returns false if the path is incomplete.
  bool add_octagon_at(int start);
  void add_octagon(const Octagon& o);

  int vertex_count() const { return nv_; }
  int edge_count() const;
  int edge_count(int letter) const;
  int octagon_count() const { return (int)octs_.size(); }
  int boundary_edge_count() const { return 2 * edge_count() - 8 * octagon_count(); }
  int euler_characteristic() const { return nv_ - edge_count() + octagon_count(); }
  const std::vector<Octagon>& octagons() const { return octs_; }

  bool slot_occupied(int v, int slot) const;

  std::optional<std::string> validate() const;  // nullopt when ok

  std::vector<BoundaryCycle> boundary_cycles() const;
  BoundaryReport classify_boundary() const;
  bool is_boundary_reduced() const;
  bool is_strongly_boundary_reduced() const;
  int max_defect() const;

  // Pieces of the augmented boundary: every contiguous arc, with its counts.
  struct Piece {
    int exposed;   // e(P)
    int hanging;   // he(P)
    int chi;       // 1 for an arc, 0 for a full circle
  };
  std::vector<Piece> all_pieces() const;

  std::vector<int> component_of() const;  // vertex -> component id
  int component_count() const;
  bool connected() const;

  std::vector<Morphism> morphisms_to(const TiledSurface& Z) const;
  std::vector<Morphism> embeddings_into(const TiledSurface& Z) const;

  // All consistent vertex-identification quotients (including the identity);
  // each is the projection morphism together with its codomain.
  struct Quotient {
    Morphism map;
    TiledSurface image;
  };
  std::vector<Quotient> quotients(size_t state_cap = 2'000'000) const;
  // Image complex of a vertex assignment into nothing (fold by partition).
  static std::optional<TiledSurface> fold_by(const TiledSurface& Y, const std::vector<int>& part,
                                             int nclasses);

  std::string canonical_form() const;
  bool isomorphic(const TiledSurface& other) const;

  // Octagon side coverage: does an octagon lie on the left (resp. right)
  // of the edge (letter, tail)?
  bool octagon_on_left(int letter, int tail) const;
  bool octagon_on_right(int letter, int tail) const;

  TiledSurface disjoint_union(const TiledSurface& other) const;

  // Apply a morphism to an octagon and canonicalize.
  static Octagon map_octagon(const Octagon& o, const std::vector<int>& vmap);

 private:
  struct FaceSet;
  void compute_faces(std::vector<std::vector<Dart>>& faces, std::vector<std::vector<int>>& gaps,
                     std::vector<bool>& covered) const;
  Dart dart_after(const Dart& d, int& gap_out) const;

  int nv_ = 0;
  std::array<std::vector<int>, 4> next_, prev_;
  std::vector<Octagon> octs_;
};

LetterCode dart_reading(const Dart& d);

// Standard small surfaces used across tests and the pipeline.
TiledSurface single_vertex();
TiledSurface bare_cycle(const std::vector<LetterCode>& cyclic_word);
TiledSurface octagon_disc();        // 8 vertices, 8 edges, 1 octagon
TiledSurface bare_relator_cycle();  // 8 vertices, 8 edges, 0 octagons
TiledSurface genus2_base_cover();   // 1 vertex, 4 loops, 1 octagon (degree-1 cover)

}  // namespace covstat::tiled
