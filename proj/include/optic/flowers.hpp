#pragma once

#include <string>
#include <vector>

#include "optic/dyn.hpp"

namespace optic::flowers {

enum class Species { Setosa, Versicolor, Virginica };

const std::string& species_name(Species s); // "Iris setosa", ...

struct Measurements {
    double sepal_length{};
    double sepal_width{};
    double petal_length{};
    double petal_width{};

    friend bool operator==(const Measurements&, const Measurements&) = default;
};

struct Flower {
    Measurements measurements;
    Species species{};
};

// Loads the bundled CSV (header sepal_length,sepal_width,petal_length,
// petal_width,species). Throws InputError on missing or malformed data.
std::vector<Flower> load_iris_csv(const std::string& file_path);

// Species of the context element nearest to the query in Euclidean
// distance over the four measurements; ties break toward the lowest
// index. Throws EmptyContextError on an empty context.
Species knn_classify(const Measurements& query, const std::vector<Flower>& context);

// Value encodings used by the dynamic optics and the CLI demos.
Value measurements_to_value(const Measurements& m); // array of four numbers
Measurements measurements_from_value(const Value& v);
Value flower_to_value(const Flower& f); // {"measurements": [...], "species": "..."}
Flower flower_from_value(const Value& v);

// List lens over flowers: view projects the measurements, classify
// runs 1-NN against the list of wholes.
DynOptic measure_nearest_optic();

// Kaleidoscope over measurement vectors: a fold of numbers applied
// componentwise to the four fields.
DynOptic aggregate_optic();

} // namespace optic::flowers
