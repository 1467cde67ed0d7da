/**
 * Keyboard shortcuts for the choice list: 1-9 select the first nine
 * choices, 0 the tenth, then q / w / e. The hints are displayed next to
 * each choice, so annotators can keep their hands on the keyboard.
 */

export const CHOICE_KEYS = [
  "1", "2", "3", "4", "5", "6", "7", "8", "9", "0", "q", "w", "e",
] as const;

export function choiceIndexForKey(key: string): number | null {
  const index = CHOICE_KEYS.indexOf(key.toLowerCase() as (typeof CHOICE_KEYS)[number]);
  return index === -1 ? null : index;
}

export function keyForChoiceIndex(index: number): string | null {
  return CHOICE_KEYS[index] ?? null;
}
