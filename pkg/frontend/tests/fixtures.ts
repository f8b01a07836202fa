// Hand-written payloads matching the service's response schemas.

import type { DiffResponse, EgoView, PairViewResponse, SolutionSummary, SolutionsResponse } from "../src/types";

export const summaries: SolutionSummary[] = [
  {
    method_id: "method-a",
    display_name: "Method A",
    origin: "imported",
    parameters: {},
    source_platform: "foursquare",
    target_platform: "twitter",
    prec_at_1: 0.6667,
    mrr: 0.75,
    n_evaluated: 3,
  },
  {
    method_id: "method-b",
    display_name: "Method B",
    origin: "imported",
    parameters: {},
    source_platform: "foursquare",
    target_platform: "twitter",
    prec_at_1: null,
    mrr: null,
    n_evaluated: 0,
  },
];

export const solutionsBody: SolutionsResponse = { schema_version: 1, solutions: summaries };

export const diffBody: DiffResponse = {
  schema_version: 1,
  method_a: "method-a",
  method_b: "method-b",
  criterion: "rank1",
  sources: [
    { source_id: "f01", username: "bernard_soon" },
    { source_id: "f03", username: "joelle_lee" },
  ],
};

export function egoView(platform: string, overrides: Partial<EgoView> = {}): EgoView {
  // four nodes: ego (degree 3) then neighbors by descending degree
  const base: EgoView = {
    ego: { platform, user_id: "u0" },
    directed: true,
    nodes: [
      { ref: { platform, user_id: "u0" }, username: "ego_user", screen_name: "Ego User", bio: "hello", degree: 3, position: 0 },
      { ref: { platform, user_id: "u1" }, username: "amy_a", screen_name: "Amy A", bio: null, degree: 2, position: 1 },
      { ref: { platform, user_id: "u2" }, username: "bob_b", screen_name: null, bio: "biking", degree: 2, position: 2 },
      { ref: { platform, user_id: "u3" }, username: "cat_c", screen_name: "Cat C", bio: null, degree: 1, position: 3 },
    ],
    edges: [
      [0, 1],
      [0, 2],
      [0, 3],
      [1, 2],
    ],
    linked_highlight: [],
    counterpart_of: {},
  };
  return { ...base, ...overrides };
}

export const pairBody: PairViewResponse = {
  schema_version: 1,
  method_id: "method-a",
  source: {
    platform: "foursquare",
    user_id: "f01",
    username: "bernard_soon",
    screen_name: "Bernard Soon",
    bio: "food first",
    profile_image_ref: null,
    has_image: false,
  },
  source_cloud: [
    { term: "laksa", count: 4 },
    { term: "satay", count: 2 },
    { term: "queue", count: 1 },
  ],
  tabs: [
    {
      rank: 1,
      score: 0.358,
      target: {
        platform: "twitter",
        user_id: "t01",
        username: "Bernnn",
        screen_name: "Bernard Soon",
        bio: "dad, eater",
        profile_image_ref: null,
        has_image: false,
      },
      target_cloud: [
        { term: "laksa", count: 3 },
        { term: "family", count: 1 },
      ],
      target_ego: egoView("twitter", {
        linked_highlight: [1],
        counterpart_of: { "1": { platform: "foursquare", user_id: "u1" } },
      }),
      source_ego: egoView("foursquare", {
        linked_highlight: [1],
        counterpart_of: { "1": { platform: "twitter", user_id: "u1" } },
      }),
    },
    {
      rank: 2,
      score: 0.21,
      target: {
        platform: "twitter",
        user_id: "t02",
        username: "bernda",
        screen_name: "Brenda Ong",
        bio: null,
        profile_image_ref: null,
        has_image: false,
      },
      target_cloud: [{ term: "sunset", count: 2 }],
      target_ego: egoView("twitter"),
      source_ego: egoView("foursquare"),
    },
  ],
};
