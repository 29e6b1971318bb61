#include "optic/flowers.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "optic/errors.hpp"

namespace optic::flowers {

const std::string& species_name(Species s) {
    static const std::array<std::string, 3> names{"Iris setosa", "Iris versicolor",
                                                  "Iris virginica"};
    return names[static_cast<std::size_t>(s)];
}

namespace {

Species species_from_label(const std::string& label) {
    if (label == "Iris-setosa" || label == "Iris setosa" || label == "setosa")
        return Species::Setosa;
    if (label == "Iris-versicolor" || label == "Iris versicolor" || label == "versicolor")
        return Species::Versicolor;
    if (label == "Iris-virginica" || label == "Iris virginica" || label == "virginica")
        return Species::Virginica;
    throw InputError("unknown species label '" + label + "'");
}

} // namespace

std::vector<Flower> load_iris_csv(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) throw InputError("cannot open dataset '" + file_path + "'");
    std::string line;
    if (!std::getline(in, line) ||
        line != "sepal_length,sepal_width,petal_length,petal_width,species")
        throw InputError("unexpected dataset header in '" + file_path + "'");
    std::vector<Flower> flowers;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::array<double, 4> nums{};
        for (double& n : nums) {
            if (!std::getline(ss, cell, ',')) throw InputError("short dataset row: " + line);
            try {
                n = std::stod(cell);
            } catch (const std::exception&) {
                throw InputError("bad number '" + cell + "' in dataset row: " + line);
            }
            if (!std::isfinite(n) || n < 0)
                throw InputError("measurement out of range in dataset row: " + line);
        }
        if (!std::getline(ss, cell)) throw InputError("missing species in dataset row: " + line);
        flowers.push_back(Flower{{nums[0], nums[1], nums[2], nums[3]}, species_from_label(cell)});
    }
    return flowers;
}

namespace {

double squared_distance(const Measurements& x, const Measurements& y) {
    auto d = [](double a, double b) { return (a - b) * (a - b); };
    return d(x.sepal_length, y.sepal_length) + d(x.sepal_width, y.sepal_width) +
           d(x.petal_length, y.petal_length) + d(x.petal_width, y.petal_width);
}

} // namespace

Species knn_classify(const Measurements& query, const std::vector<Flower>& context) {
    if (context.empty()) throw EmptyContextError("1-NN classification needs a nonempty context");
    std::size_t best = 0;
    double best_dist = squared_distance(query, context[0].measurements);
    for (std::size_t i = 1; i < context.size(); ++i) {
        double dist = squared_distance(query, context[i].measurements);
        if (dist < best_dist) {
            best_dist = dist;
            best = i;
        }
    }
    return context[best].species;
}

Value measurements_to_value(const Measurements& m) {
    return Value{m.sepal_length, m.sepal_width, m.petal_length, m.petal_width};
}

Measurements measurements_from_value(const Value& v) {
    expect_array(v, "measurements");
    if (v.size() != 4) throw DocTypeError("measurements need exactly four numbers");
    return Measurements{expect_number(v[0], "sepal length"), expect_number(v[1], "sepal width"),
                        expect_number(v[2], "petal length"), expect_number(v[3], "petal width")};
}

Value flower_to_value(const Flower& f) {
    Value v = Value::object();
    v["measurements"] = measurements_to_value(f.measurements);
    v["species"] = species_name(f.species);
    return v;
}

Flower flower_from_value(const Value& v) {
    Flower f;
    f.measurements = measurements_from_value(expect_object_field(v, "measurements"));
    const std::string& label = expect_text(expect_object_field(v, "species"), "species");
    if (label == "Iris setosa")
        f.species = Species::Setosa;
    else if (label == "Iris versicolor")
        f.species = Species::Versicolor;
    else if (label == "Iris virginica")
        f.species = Species::Virginica;
    else
        throw DocTypeError("unknown species '" + label + "'");
    return f;
}

DynOptic measure_nearest_optic() {
    return VListLens{
        [](const Value& s) { return expect_object_field(s, "measurements"); },
        [](const std::vector<Value>& ss, const Value& b) {
            Measurements query = measurements_from_value(b);
            std::vector<Flower> context;
            context.reserve(ss.size());
            for (const auto& s : ss) context.push_back(flower_from_value(s));
            Flower out{query, knn_classify(query, context)};
            return flower_to_value(out);
        },
    };
}

DynOptic aggregate_optic() {
    return VKaleidoscope{[](const std::function<Value(const std::vector<Value>&)>& fold) {
        return [fold](const std::vector<Value>& measurement_rows) {
            Value out = Value::array();
            for (std::size_t field = 0; field < 4; ++field) {
                std::vector<Value> column;
                column.reserve(measurement_rows.size());
                for (const auto& row : measurement_rows) {
                    expect_array(row, "measurements");
                    if (row.size() != 4) throw DocTypeError("measurements need exactly four numbers");
                    column.push_back(row[field]);
                }
                out.push_back(fold(column));
            }
            return out;
        };
    }};
}

} // namespace optic::flowers
