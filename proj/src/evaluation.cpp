#include "sentiment/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "sentiment/errors.hpp"

namespace sentiment {

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace

ConfusionMatrix confusion(std::span<const Polarity> predictions, std::span<const Polarity> truths,
                          Polarity positive_class) {
    if (predictions.size() != truths.size()) {
        throw DataError("confusion: " + std::to_string(predictions.size()) + " predictions vs " +
                        std::to_string(truths.size()) + " truths");
    }
    if (predictions.empty()) throw DataError("confusion: no predictions");
    ConfusionMatrix cm;
    cm.positive_class = positive_class;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const bool pred_pos = predictions[i] == positive_class;
        const bool truth_pos = truths[i] == positive_class;
        if (pred_pos && truth_pos) ++cm.tp;
        else if (pred_pos) ++cm.fp;
        else if (truth_pos) ++cm.fn;
        else ++cm.tn;
    }
    return cm;
}

MetricsRow metrics(const ConfusionMatrix& cm) {
    if (cm.tp + cm.fn == 0 || cm.tn + cm.fp == 0) {
        throw DataError("metrics need both classes among the truths (tp+fn=" +
                        std::to_string(cm.tp + cm.fn) + ", tn+fp=" +
                        std::to_string(cm.tn + cm.fp) + ")");
    }
    const auto d = [](std::size_t v) { return static_cast<double>(v); };
    MetricsRow m;
    m.recall = d(cm.tp) / d(cm.tp + cm.fn);
    m.sensitivity = m.recall;
    m.degenerate_precision = cm.tp + cm.fp == 0;
    m.precision = m.degenerate_precision ? 0.0 : d(cm.tp) / d(cm.tp + cm.fp);
    m.specificity = d(cm.tn) / d(cm.tn + cm.fp);
    m.f_measure = (m.precision + m.recall) == 0.0
                      ? 0.0
                      : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    m.accuracy = d(cm.tp + cm.tn) / d(cm.total());
    return m;
}

RocCurve roc_curve(std::span<const double> scores, std::span<const Polarity> truths,
                   Polarity positive_class) {
    if (scores.size() != truths.size()) throw DataError("roc_curve: scores and truths differ in length");
    if (scores.empty()) throw DataError("roc_curve: no scores");
    const auto positives = static_cast<std::size_t>(
        std::count(truths.begin(), truths.end(), positive_class));
    const std::size_t negatives = truths.size() - positives;
    if (positives == 0 || negatives == 0) throw DataError("roc_curve: truths contain a single class");

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    RocCurve curve;
    curve.positive_class = positive_class;
    curve.points.push_back({0.0, 0.0});
    std::size_t tp = 0;
    std::size_t fp = 0;
    for (std::size_t i = 0; i < order.size();) {
        const double s = scores[order[i]];
        for (; i < order.size() && scores[order[i]] == s; ++i) {
            (truths[order[i]] == positive_class ? tp : fp) += 1;
        }
        curve.points.push_back({static_cast<double>(fp) / static_cast<double>(negatives),
                                static_cast<double>(tp) / static_cast<double>(positives)});
    }
    if (curve.points.back() != RocPoint{1.0, 1.0}) curve.points.push_back({1.0, 1.0});
    curve.auc = auc(curve);
    return curve;
}

double auc(const RocCurve& curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const auto& a = curve.points[i - 1];
        const auto& b = curve.points[i];
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
    }
    return area;
}

SummaryTable summary_table(std::span<const SummaryEntry> entries) {
    if (entries.empty()) throw DataError("summary table needs at least one result");
    SummaryTable t;
    const auto position = [](std::vector<std::string>& list, const std::string& key) {
        const auto it = std::find(list.begin(), list.end(), key);
        if (it != list.end()) return static_cast<std::size_t>(it - list.begin());
        list.push_back(key);
        return list.size() - 1;
    };
    for (const auto& e : entries) {
        position(t.datasets, e.dataset);
        position(t.classifiers, e.classifier);
    }
    t.cells.assign(t.datasets.size(),
                   std::vector<std::optional<SummaryEntry>>(t.classifiers.size()));
    for (const auto& e : entries) {
        t.cells[position(t.datasets, e.dataset)][position(t.classifiers, e.classifier)] = e;
    }
    return t;
}

std::string render_summary(const SummaryTable& table) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"dataset"};
    for (const auto& c : table.classifiers) {
        header.push_back(c + " accuracy%");
        header.push_back(c + " auc");
    }
    grid.push_back(std::move(header));
    for (std::size_t r = 0; r < table.datasets.size(); ++r) {
        std::vector<std::string> row{table.datasets[r]};
        for (const auto& cell : table.cells[r]) {
            row.push_back(cell ? fixed(cell->accuracy * 100.0, 2) : "-");
            row.push_back(cell && cell->auc ? fixed(*cell->auc, 4) : "-");
        }
        grid.push_back(std::move(row));
    }

    std::vector<std::size_t> width(grid.front().size(), 0);
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += "  ";
            out += row[c];
            if (c + 1 < row.size()) out.append(width[c] - row[c].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

std::string accuracy_line(const SummaryTable& table, std::size_t row) {
    std::string out = table.datasets.at(row) + ":";
    bool first = true;
    for (const auto& cell : table.cells.at(row)) {
        out += first ? " " : ", ";
        first = false;
        out += cell ? fixed(cell->accuracy * 100.0, 2) : "-";
    }
    return out;
}

void write_roc_csv(const RocCurve& curve, std::ostream& out) {
    out << "fpr,tpr\n";
    char buf[80];
    for (const auto& p : curve.points) {
        std::snprintf(buf, sizeof buf, "%.6f,%.6f\n", p.fpr, p.tpr);
        out << buf;
    }
}

void write_confusion_csv(std::span<const ConfusionMatrix> matrices, std::ostream& out) {
    out << "positive_class,tp,fp,tn,fn\n";
    for (const auto& cm : matrices) {
        out << to_string(cm.positive_class) << ',' << cm.tp << ',' << cm.fp << ',' << cm.tn << ','
            << cm.fn << '\n';
    }
}

}  // namespace sentiment
