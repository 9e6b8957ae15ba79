#pragma once

#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "gridplan/common.hpp"

namespace gridplan {

// One contiguous block of sampled consecutive hours (e.g. a week).
// scale_to_year stretches sampled hours so all series jointly cover a year.
struct Timeseries {
    std::string id;
    int num_timepoints = 0;
    double hours_per_timepoint = 0.0;
    double scale_to_year = 0.0;
};

struct Timepoint {
    std::string id;             // "<timeseries_id>:<index>"
    std::string timeseries_id;
    int index_in_series = 0;
};

struct CalendarOptions {
    double annual_hours_target = 8760.0;
    double tolerance_hours = 10.0;  // leap-year 8784 needs a wider target, not more slack
    std::string period_label = "2050";
    double period_years = 10.0;
};

// The period -> timeseries -> timepoint hierarchy plus the per-timepoint
// hours-per-year weights that annualize sampled quantities. Immutable
// after construction; shared read-only across scenario solves.
class Calendar {
public:
    std::string period_label;
    double period_years = 0.0;
    std::vector<Timeseries> timeseries;
    std::vector<Timepoint> timepoints;

    size_t num_timepoints() const { return timepoints.size(); }
    size_t num_series() const { return timeseries.size(); }

    // hours-per-year weight w of a timepoint
    double weight(size_t tp) const { return weights_[tp]; }
    // duration of one timepoint in hours
    double hours(size_t tp) const { return timeseries[tp_series_[tp]].hours_per_timepoint; }
    size_t series_of(size_t tp) const { return tp_series_[tp]; }
    // dense index of the first timepoint of series s
    size_t series_begin(size_t s) const { return series_start_[s]; }
    size_t series_end(size_t s) const {
        return series_start_[s] + static_cast<size_t>(timeseries[s].num_timepoints);
    }
    double series_sampled_hours(size_t s) const {
        return timeseries[s].num_timepoints * timeseries[s].hours_per_timepoint;
    }

    bool has_timepoint(const std::string& id) const { return tp_index_.count(id) > 0; }
    size_t timepoint_index(const std::string& id) const {
        auto it = tp_index_.find(id);
        if (it == tp_index_.end()) throw ValidationError("unknown timepoint id '" + id + "'");
        return it->second;
    }

    friend Calendar build_calendar(const std::vector<Timeseries>& series_defs,
                                   const CalendarOptions& opt);

private:
    std::vector<double> weights_;
    std::vector<size_t> tp_series_;
    std::vector<size_t> series_start_;
    std::unordered_map<std::string, size_t> tp_index_;
};

inline Calendar build_calendar(const std::vector<Timeseries>& series_defs,
                               const CalendarOptions& opt = {}) {
    if (series_defs.empty()) throw ValidationError("calendar needs at least one timeseries");
    Calendar cal;
    cal.period_label = opt.period_label;
    cal.period_years = opt.period_years;
    double weight_sum = 0.0;
    for (const auto& s : series_defs) {
        if (s.id.empty()) throw ValidationError("timeseries with empty id");
        if (s.num_timepoints < 1)
            throw ValidationError("timeseries '" + s.id + "': num_timepoints must be >= 1");
        if (!(s.hours_per_timepoint > 0.0))
            throw ValidationError("timeseries '" + s.id + "': hours_per_timepoint must be > 0");
        if (!(s.scale_to_year > 0.0))
            throw ValidationError("timeseries '" + s.id + "': scale_to_year must be > 0");
        size_t series_index = cal.timeseries.size();
        cal.series_start_.push_back(cal.timepoints.size());
        for (int k = 0; k < s.num_timepoints; ++k) {
            Timepoint tp;
            tp.timeseries_id = s.id;
            tp.index_in_series = k;
            tp.id = s.id + ":" + std::to_string(k);
            if (cal.tp_index_.count(tp.id))
                throw ValidationError("duplicate timeseries id '" + s.id + "'");
            cal.tp_index_[tp.id] = cal.timepoints.size();
            cal.timepoints.push_back(std::move(tp));
            cal.tp_series_.push_back(series_index);
            double w = s.hours_per_timepoint * s.scale_to_year;
            cal.weights_.push_back(w);
            weight_sum += w;
        }
        cal.timeseries.push_back(s);
    }
    if (std::fabs(weight_sum - opt.annual_hours_target) > opt.tolerance_hours) {
        throw ValidationError("calendar weights sum to " + std::to_string(weight_sum) +
                              " hours, expected " + std::to_string(opt.annual_hours_target) +
                              " +/- " + std::to_string(opt.tolerance_hours));
    }
    return cal;
}

inline double timepoint_weight(const Calendar& cal, const std::string& timepoint_id) {
    return cal.weight(cal.timepoint_index(timepoint_id));
}

inline double timepoint_weight(const Calendar& cal, const Timepoint& tp) {
    return timepoint_weight(cal, tp.id);
}

}  // namespace gridplan
